//! Skew braces of `M1` type and their Yang-Baxter solutions.
//!
//! A regular subgroup `S` of `Hol(M1)` is in bijection with `M1` through
//! `g -> g(1)`. Elements of the brace are labelled by that image, so the
//! label of `g` is an index into `0..p^3` with `0` the identity. The
//! additive operation is the product of `M1` on labels and the
//! multiplicative operation is the product of `S`.

use alloc::vec::Vec;

use crate::automorphism::AutM1Elt;
use crate::error::Error;
use crate::fp::Prime;
use crate::heisenberg::M1Elt;
use crate::holomorph::HolElt;
use crate::subgroup::{GroupType, SubgroupHol};

pub type Label = u16;

/// Two dense operation tables on `0..p^3` sharing the identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBrace {
    p: Prime,
    n: usize,
    add: Vec<Label>,
    mul: Vec<Label>,
    add_inv: Vec<Label>,
    mul_inv: Vec<Label>,
    /// The holomorph element behind each label, when built from a subgroup.
    elements: Option<Vec<HolElt>>,
}

/// First triple `(a, b, c)` where `a.(b + c) != a.b - a + a.c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub a: Label,
    pub b: Label,
    pub c: Label,
}

impl SkewBrace {
    /// The brace of a regular subgroup.
    pub fn from_subgroup(s: &SubgroupHol) -> Result<Self, Error> {
        if !s.is_regular() {
            return Err(Error::NotRegular);
        }
        let p = s.prime();
        let n = s.order();
        let one = M1Elt::identity(p);
        let mut elements = alloc::vec![HolElt::identity(p); n];
        for g in s.elements() {
            elements[g.act(&one).index()] = *g;
        }
        let labels: Vec<M1Elt> = (0..n).map(|i| M1Elt::from_index(p, i)).collect();
        let mut add = alloc::vec![0; n * n];
        let mut mul = alloc::vec![0; n * n];
        for x in 0..n {
            let g = &elements[x];
            for y in 0..n {
                add[x * n + y] = (labels[x] * labels[y]).index() as Label;
                mul[x * n + y] = g.act(&labels[y]).index() as Label;
            }
        }
        let mut b = Self::from_tables(p, add, mul)?;
        b.elements = Some(elements);
        Ok(b)
    }

    /// Wraps raw tables. Both must be group tables on `0..p^3` with
    /// identity `0`; no brace compatibility is assumed.
    pub fn from_tables(p: Prime, add: Vec<Label>, mul: Vec<Label>) -> Result<Self, Error> {
        let n = p.as_u64().pow(3) as usize;
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::WrongOrder {
                expected: n * n,
                found: add.len().min(mul.len()),
            });
        }
        let add_inv = table_inverses(n, &add)?;
        let mul_inv = table_inverses(n, &mul)?;
        Ok(SkewBrace {
            p,
            n,
            add,
            mul,
            add_inv,
            mul_inv,
            elements: None,
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        0..self.n as Label
    }

    #[inline]
    pub fn add(&self, x: Label, y: Label) -> Label {
        self.add[usize::from(x) * self.n + usize::from(y)]
    }

    #[inline]
    pub fn mul(&self, x: Label, y: Label) -> Label {
        self.mul[usize::from(x) * self.n + usize::from(y)]
    }

    #[inline]
    pub fn neg(&self, x: Label) -> Label {
        self.add_inv[usize::from(x)]
    }

    #[inline]
    pub fn mul_inv(&self, x: Label) -> Label {
        self.mul_inv[usize::from(x)]
    }

    pub fn add_table(&self) -> &[Label] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Label] {
        &self.mul
    }

    /// Holomorph element with label `x`, if built from a subgroup.
    pub fn element(&self, x: Label) -> Option<HolElt> {
        self.elements.as_ref().map(|e| e[usize::from(x)])
    }

    /// Checks `a.(b + c) = a.b - a + a.c` on every triple.
    pub fn verify_axiom(&self) -> Result<(), AxiomWitness> {
        self.verify_axiom_on(self.labels())
    }

    /// The axiom on every triple in `xs x B x B`.
    pub fn verify_axiom_on(&self, xs: impl IntoIterator<Item = Label>) -> Result<(), AxiomWitness> {
        for a in xs {
            let na = self.neg(a);
            for b in self.labels() {
                let ab = self.mul(a, b);
                let left_part = self.add(ab, na);
                for c in self.labels() {
                    let lhs = self.mul(a, self.add(b, c));
                    let rhs = self.add(left_part, self.mul(a, c));
                    if lhs != rhs {
                        return Err(AxiomWitness { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// `b -> -a + a.b`.
    pub fn lambda(&self, a: Label) -> Vec<Label> {
        let na = self.neg(a);
        self.labels()
            .map(|b| self.add(na, self.mul(a, b)))
            .collect()
    }

    pub fn lambdas(&self) -> Vec<Vec<Label>> {
        self.labels().map(|a| self.lambda(a)).collect()
    }

    /// Every `lambda_a` is an additive automorphism and `a -> lambda_a`
    /// is multiplicative.
    pub fn verify_lambda(&self) -> bool {
        let lam = self.lambdas();
        for a in self.labels() {
            let la = &lam[usize::from(a)];
            let mut seen = alloc::vec![false; self.n];
            for &y in la {
                if core::mem::replace(&mut seen[usize::from(y)], true) {
                    return false;
                }
            }
            for b in self.labels() {
                let lab = &lam[usize::from(self.mul(a, b))];
                let lb = &lam[usize::from(b)];
                for c in self.labels() {
                    let ci = usize::from(c);
                    if lab[ci] != la[usize::from(lb[ci])] {
                        return false;
                    }
                    let sum = la[usize::from(self.add(b, c))];
                    if sum != self.add(la[usize::from(b)], la[ci]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn add_central(&self, a: Label) -> bool {
        self.labels().all(|b| self.add(a, b) == self.add(b, a))
    }

    fn mul_central(&self, a: Label) -> bool {
        self.labels().all(|b| self.mul(a, b) == self.mul(b, a))
    }

    /// `{a : a.b = a + b and a + b = b + a for all b}`.
    pub fn socle(&self) -> Vec<Label> {
        self.labels()
            .filter(|&a| {
                self.labels().all(|b| self.mul(a, b) == self.add(a, b)) && self.add_central(a)
            })
            .collect()
    }

    /// Socle elements central for the multiplication.
    pub fn annihilator(&self) -> Vec<Label> {
        self.socle()
            .into_iter()
            .filter(|&a| self.mul_central(a))
            .collect()
    }

    /// Closed under both operations, normal in both groups and stable
    /// under every `lambda_a`.
    pub fn is_ideal(&self, set: &[Label]) -> bool {
        let mut member = alloc::vec![false; self.n];
        for &x in set {
            member[usize::from(x)] = true;
        }
        let inside = |x: Label| member[usize::from(x)];
        if !inside(0) {
            return false;
        }
        for &x in set {
            if !inside(self.neg(x)) || !inside(self.mul_inv(x)) {
                return false;
            }
            for &y in set {
                if !inside(self.add(x, y)) || !inside(self.mul(x, y)) {
                    return false;
                }
            }
        }
        for a in self.labels() {
            let (na, ma) = (self.neg(a), self.mul_inv(a));
            let lam = self.lambda(a);
            for &x in set {
                let add_conj = self.add(self.add(a, x), na);
                let mul_conj = self.mul(self.mul(a, x), ma);
                if !inside(add_conj) || !inside(mul_conj) || !inside(lam[usize::from(x)]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn additive_type(&self) -> GroupType {
        table_group_type(self.p, self.n, &self.add)
    }

    pub fn multiplicative_type(&self) -> GroupType {
        table_group_type(self.p, self.n, &self.mul)
    }

    /// Rebuilds each `(a, lambda_a)` as an element of `Hol(M1)` and compares
    /// it with the element it came from. Needs a brace built from a
    /// subgroup.
    pub fn embedding_round_trip(&self) -> bool {
        let Some(elements) = &self.elements else {
            return false;
        };
        let p = self.p;
        let s_idx = M1Elt::sigma(p).index();
        let t_idx = M1Elt::tau(p).index();
        for a in self.labels() {
            let lam = self.lambda(a);
            let s_img = M1Elt::from_index(p, usize::from(lam[s_idx]));
            let t_img = M1Elt::from_index(p, usize::from(lam[t_idx]));
            let Ok(f) = AutM1Elt::from_images(s_img, t_img) else {
                return false;
            };
            let agrees = (0..self.n)
                .all(|x| f.apply(&M1Elt::from_index(p, x)).index() == usize::from(lam[x]));
            let rebuilt = HolElt::new(M1Elt::from_index(p, usize::from(a)), f);
            if !agrees || rebuilt != elements[usize::from(a)] {
                return false;
            }
        }
        true
    }

    /// `r(a, b) = (lambda_a(b), lambda_a(b)^-1 . a . b)`.
    pub fn ybe(&self) -> YbeMap {
        let n = self.n;
        let mut table = alloc::vec![(0, 0); n * n];
        for a in self.labels() {
            let lam = self.lambda(a);
            for b in self.labels() {
                let u = lam[usize::from(b)];
                let v = self.mul(self.mul(self.mul_inv(u), a), b);
                table[usize::from(a) * n + usize::from(b)] = (u, v);
            }
        }
        YbeMap { n, table }
    }
}

fn table_inverses(n: usize, op: &[Label]) -> Result<Vec<Label>, Error> {
    (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| op[x * n + y] == 0)
                .map(|y| y as Label)
                .ok_or_else(|| Error::Parse(alloc::format!("label {x} has no inverse")))
        })
        .collect()
}

/// Type of a group of order `p^3` given by its table; commutativity and
/// exponent already separate the five types.
pub fn table_group_type(p: Prime, n: usize, op: &[Label]) -> GroupType {
    let abelian = (0..n).all(|x| (x + 1..n).all(|y| op[x * n + y] == op[y * n + x]));
    let exponent = (0..n)
        .map(|x| {
            let mut k = 1u64;
            let mut acc = x;
            while acc != 0 {
                acc = usize::from(op[acc * n + x]);
                k += 1;
            }
            k
        })
        .max()
        .unwrap_or(1);
    let q = p.as_u64();
    match (abelian, exponent) {
        (true, e) if e == q => GroupType::ElemAbelianP3,
        (true, e) if e == q * q => GroupType::Cp2xCp,
        (true, _) => GroupType::CyclicP3,
        (false, e) if e == q => GroupType::HeisenbergM1,
        (false, _) => GroupType::ExtraspecialM2,
    }
}

/// A map `B x B -> B x B` stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeMap {
    n: usize,
    table: Vec<(Label, Label)>,
}

/// First triple violating the braid relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidWitness {
    pub x: Label,
    pub y: Label,
    pub z: Label,
}

impl YbeMap {
    #[inline]
    pub fn apply(&self, a: Label, b: Label) -> (Label, Label) {
        self.table[usize::from(a) * self.n + usize::from(b)]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `r12 r23 r12 = r23 r12 r23` on every triple in `xs x B x B`.
    pub fn verify_braid_on(&self, xs: impl IntoIterator<Item = Label>) -> Result<(), BraidWitness> {
        let n = self.n as Label;
        for x in xs {
            for y in 0..n {
                for z in 0..n {
                    let (a, b) = self.apply(x, y);
                    let (b, c) = self.apply(b, z);
                    let (a, b) = self.apply(a, b);
                    let left = (a, b, c);

                    let (b, c) = self.apply(y, z);
                    let (a, b) = self.apply(x, b);
                    let (b, c) = self.apply(b, c);
                    if left != (a, b, c) {
                        return Err(BraidWitness { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn verify_braid(&self) -> Result<(), BraidWitness> {
        self.verify_braid_on(0..self.n as Label)
    }

    /// `r` is a bijection and both coordinate maps are bijective in the
    /// free argument.
    pub fn verify_nondegenerate(&self) -> bool {
        let n = self.n;
        let mut seen = alloc::vec![false; n * n];
        for &(u, v) in &self.table {
            if core::mem::replace(&mut seen[usize::from(u) * n + usize::from(v)], true) {
                return false;
            }
        }
        for a in 0..n {
            let mut left = alloc::vec![false; n];
            let mut right = alloc::vec![false; n];
            for b in 0..n {
                let u = self.table[a * n + b].0;
                let v = self.table[b * n + a].1;
                if core::mem::replace(&mut left[usize::from(u)], true)
                    || core::mem::replace(&mut right[usize::from(v)], true)
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_involutive(&self) -> bool {
        let n = self.n as Label;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (u, v) = self.apply(a, b);
                self.apply(u, v) == (a, b)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{representative_by_id, trivial_subgroup};

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn brace(id: &str) -> SkewBrace {
        let s = representative_by_id(p5(), id).unwrap().subgroup().unwrap();
        SkewBrace::from_subgroup(&s).unwrap()
    }

    #[test]
    fn trivial_brace() {
        let b = SkewBrace::from_subgroup(&trivial_subgroup(p5())).unwrap();
        assert_eq!(b.add_table(), b.mul_table());
        assert!(b.verify_axiom().is_ok());
        assert!(b
            .labels()
            .all(|a| b.lambda(a) == b.labels().collect::<Vec<_>>()));
        assert_eq!(b.socle().len(), 5);
        assert_eq!(b.annihilator().len(), 5);
        let r = b.ybe();
        for a in b.labels().step_by(7) {
            for c in b.labels().step_by(3) {
                let conj = b.mul(b.mul(b.mul_inv(c), a), c);
                assert_eq!(r.apply(a, c), (c, conj));
            }
        }
    }

    #[test]
    fn elementary_abelian_structure() {
        let b = brace("r=p/caseA/c=1");
        assert_eq!(b.additive_type(), GroupType::HeisenbergM1);
        assert_eq!(b.multiplicative_type(), GroupType::ElemAbelianP3);
        assert!(b.verify_axiom().is_ok());
        assert!(b.verify_lambda());
        assert!(b.embedding_round_trip());
    }

    #[test]
    fn incompatible_addition_is_caught() {
        let b = brace("r=p3/t3=0/s=1");
        let p = p5();
        let n = b.order();
        let mut add = alloc::vec![0; n * n];
        for x in 0..n {
            let u = M1Elt::from_index(p, x);
            for y in 0..n {
                let v = M1Elt::from_index(p, y);
                let sum = M1Elt::new(
                    p,
                    (u.a + v.a).into(),
                    (u.b + v.b).into(),
                    (u.c + v.c).into(),
                );
                add[x * n + y] = sum.index() as Label;
            }
        }
        let bad = SkewBrace::from_tables(p, add, b.mul_table().to_vec()).unwrap();
        let w = bad.verify_axiom().unwrap_err();
        let lhs = bad.mul(w.a, bad.add(w.b, w.c));
        let rhs = bad.add(bad.add(bad.mul(w.a, w.b), bad.neg(w.a)), bad.mul(w.a, w.c));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn socle_is_an_ideal() {
        let b = brace("r=p2/II/x3=1,a=0");
        let soc = b.socle();
        assert_eq!(soc.len(), 5);
        assert!(b.is_ideal(&soc));
        assert!(b.is_ideal(&b.annihilator()));
        assert!(!b.is_ideal(&[0, 1]));
    }
}
