//! The Heisenberg group `M1` of order `p^3` and exponent `p`.
//!
//! Elements are kept in the normal form `r^a s^b t^c` where `r` is central
//! and `t s = r s t`. Multiplication then reads
//! `(a, b, c) (a', b', c') = (a + a' + c b', b + b', c + c')`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::Error;
use crate::fp::Prime;

/// `r^a s^b t^c` with all three exponents reduced mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct M1Elt {
    p: Prime,
    pub a: u16,
    pub b: u16,
    pub c: u16,
}

impl M1Elt {
    /// Builds an element from arbitrary integer exponents, reducing each mod `p`.
    pub fn new(p: Prime, a: i64, b: i64, c: i64) -> Self {
        M1Elt {
            p,
            a: p.reduce(a),
            b: p.reduce(b),
            c: p.reduce(c),
        }
    }

    /// Builds an element from residues that must already lie in `[0, p)`.
    pub fn from_residues(p: Prime, a: i64, b: i64, c: i64) -> Result<Self, Error> {
        for v in [a, b, c] {
            if v < 0 || v >= i64::from(p.get()) {
                return Err(Error::ResidueOutOfRange {
                    value: v,
                    p: p.get(),
                });
            }
        }
        Ok(Self::new(p, a, b, c))
    }

    pub fn identity(p: Prime) -> Self {
        M1Elt {
            p,
            a: 0,
            b: 0,
            c: 0,
        }
    }

    pub fn rho(p: Prime) -> Self {
        Self::new(p, 1, 0, 0)
    }

    pub fn sigma(p: Prime) -> Self {
        Self::new(p, 0, 1, 0)
    }

    pub fn tau(p: Prime) -> Self {
        Self::new(p, 0, 0, 1)
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    pub fn is_central(&self) -> bool {
        self.b == 0 && self.c == 0
    }

    /// Position in `0..p^3`, ordered lexicographically on `(a, b, c)`.
    #[inline]
    pub fn index(&self) -> usize {
        let p = self.p.get() as usize;
        (usize::from(self.a) * p + usize::from(self.b)) * p + usize::from(self.c)
    }

    pub fn from_index(p: Prime, idx: usize) -> Self {
        let q = p.get() as usize;
        M1Elt {
            p,
            a: (idx / (q * q)) as u16,
            b: (idx / q % q) as u16,
            c: (idx % q) as u16,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    fn mul_unchecked(&self, y: &Self) -> Self {
        let p = self.p;
        M1Elt {
            p,
            a: p.add(p.add(self.a, y.a), p.mul(self.c, y.b)),
            b: p.add(self.b, y.b),
            c: p.add(self.c, y.c),
        }
    }

    /// `(-a + b c, -b, -c)`.
    pub fn inv(&self) -> Self {
        let p = self.p;
        M1Elt {
            p,
            a: p.sub(p.mul(self.b, self.c), self.a),
            b: p.neg(self.b),
            c: p.neg(self.c),
        }
    }

    /// `x^n = r^(n a + b c n(n-1)/2) s^(n b) t^(n c)`; negative `n` allowed.
    pub fn pow(&self, n: i64) -> Self {
        let p = self.p;
        let nr = p.reduce(n);
        M1Elt {
            p,
            a: p.add(p.mul(nr, self.a), p.mul(p.mul(self.b, self.c), p.binom2(n))),
            b: p.mul(nr, self.b),
            c: p.mul(nr, self.c),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other * self.inv() * other.inv()
    }

    /// Parses the text form `r^a s^b t^c`; factors may be omitted or
    /// written bare (`s` means `s^1`) but must appear in that order.
    pub fn parse(p: Prime, text: &str) -> Result<Self, Error> {
        let mut exps = [0i64; 3];
        let mut last = None;
        for tok in text.split_whitespace() {
            let (sym, exp) = match tok.split_once('^') {
                Some((s, e)) => (
                    s,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?,
                ),
                None => (tok, 1),
            };
            let slot = match sym {
                "r" => 0,
                "s" => 1,
                "t" => 2,
                "e" | "1" if exp == 1 => continue,
                _ => return Err(Error::Parse(format!("unknown symbol {sym:?}"))),
            };
            if last.is_some_and(|l| l >= slot) {
                return Err(Error::Parse(format!(
                    "{text:?} is not in normal form order"
                )));
            }
            last = Some(slot);
            exps[slot] = exp;
        }
        Ok(M1Elt::new(p, exps[0], exps[1], exps[2]))
    }
}

impl Mul for M1Elt {
    type Output = M1Elt;

    /// # Panics
    /// Panics if the operands were built over different primes; use
    /// [`M1Elt::try_mul`] for a checked product.
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "Heisenberg elements over different primes");
        self.mul_unchecked(&rhs)
    }
}

impl fmt::Display for M1Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r^{} s^{} t^{}", self.a, self.b, self.c)
    }
}

/// Every element of `M1` in index order.
pub fn elements(p: Prime) -> impl Iterator<Item = M1Elt> {
    let q = p.get() as usize;
    (0..q * q * q).map(move |i| M1Elt::from_index(p, i))
}

/// The centre `<r>`.
pub fn center(p: Prime) -> Vec<M1Elt> {
    elements(p)
        .filter(|x| elements(p).all(|y| *x * y == y * *x))
        .collect()
}

/// The subgroups of `M1` of order `p` and `p^2`, as sorted element sets.
#[derive(Clone, Debug)]
pub struct SubgroupInventory {
    pub order_p: Vec<Vec<M1Elt>>,
    pub order_p2: Vec<Vec<M1Elt>>,
}

/// `<r>`, `<r^a s>`, `<r^b s^c t>` of order `p` and `<r, t>`, `<r, s t^d>`
/// of order `p^2`.
pub fn subgroup_inventory(p: Prime) -> SubgroupInventory {
    let cyclic = |g: M1Elt| -> Vec<M1Elt> {
        let mut v: Vec<M1Elt> = (0..i64::from(p.get())).map(|k| g.pow(k)).collect();
        v.sort();
        v
    };
    let span2 = |g: M1Elt, h: M1Elt| -> Vec<M1Elt> {
        let q = i64::from(p.get());
        let mut v = Vec::with_capacity((q * q) as usize);
        for i in 0..q {
            for j in 0..q {
                v.push(g.pow(i) * h.pow(j));
            }
        }
        v.sort();
        v.dedup();
        v
    };
    let r = M1Elt::rho(p);
    let mut order_p = alloc::vec![cyclic(r)];
    for a in p.residues() {
        order_p.push(cyclic(M1Elt::new(p, a.into(), 1, 0)));
    }
    for b in p.residues() {
        for c in p.residues() {
            order_p.push(cyclic(M1Elt::new(p, b.into(), c.into(), 1)));
        }
    }
    let mut order_p2 = alloc::vec![span2(r, M1Elt::tau(p))];
    for d in p.residues() {
        order_p2.push(span2(r, M1Elt::new(p, 0, 1, d.into())));
    }
    SubgroupInventory { order_p, order_p2 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    // Direct expansion of words in s, t using only t s = r s t.
    fn word_oracle(p: Prime, word: &[(char, i64)]) -> M1Elt {
        // Track (a, b, c) by appending one generator at a time: appending s
        // moves it left past the accumulated t^c, producing r^c.
        let (mut a, mut b, mut c) = (0i64, 0i64, 0i64);
        for &(g, n) in word {
            for _ in 0..n.rem_euclid(i64::from(p.get())) {
                match g {
                    'r' => a += 1,
                    's' => {
                        a += c;
                        b += 1;
                    }
                    't' => c += 1,
                    _ => unreachable!(),
                }
            }
        }
        M1Elt::new(p, a, b, c)
    }

    #[test]
    fn defining_relation() {
        let p = p5();
        assert_eq!(
            M1Elt::tau(p) * M1Elt::sigma(p),
            M1Elt::new(p, 1, 1, 1),
            "t s = r s t"
        );
        let st = M1Elt::new(p, 0, 1, 1);
        assert_eq!(st * st, M1Elt::new(p, 1, 2, 2));
        assert_eq!(
            st * st,
            word_oracle(p, &[('s', 1), ('t', 1), ('s', 1), ('t', 1)])
        );
    }

    #[test]
    fn product_formula_matches_word_expansion() {
        let p = Prime::new(7).unwrap();
        for a1 in 0..7 {
            for a2 in 0..7 {
                for a3 in 0..7 {
                    for a4 in [0, 3, 6] {
                        let lhs = M1Elt::new(p, 0, a1, a2) * M1Elt::new(p, 0, a3, a4);
                        let rhs = word_oracle(p, &[('s', a1), ('t', a2), ('s', a3), ('t', a4)]);
                        assert_eq!(lhs, rhs);
                        assert_eq!(lhs, M1Elt::new(p, a2 * a3, a1 + a3, a2 + a4));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_by_search() {
        let p = p5();
        let x = M1Elt::new(p, 0, 1, 1);
        let found: Vec<_> = elements(p).filter(|y| (x * *y).is_identity()).collect();
        assert_eq!(found, [M1Elt::new(p, 1, 4, 4)]);
        assert_eq!(x.inv(), M1Elt::new(p, 1, 4, 4));
        for x in elements(p) {
            assert!((x * x.inv()).is_identity());
            assert_eq!(x.inv().inv(), x);
        }
    }

    #[test]
    fn associativity_exhaustive_p5() {
        let p = p5();
        let all: Vec<_> = elements(p).collect();
        for x in &all {
            for y in &all {
                let xy = *x * *y;
                for z in &all {
                    assert_eq!(xy * *z, *x * (*y * *z));
                }
            }
        }
    }

    #[test]
    fn power_closed_form() {
        let p = p5();
        let st = M1Elt::new(p, 0, 1, 1);
        assert_eq!(st.pow(2), M1Elt::new(p, 1, 2, 2));
        for x in elements(p) {
            let mut acc = M1Elt::identity(p);
            for n in 0..10 {
                assert_eq!(x.pow(n), acc, "x={x} n={n}");
                acc = acc * x;
            }
            assert!(x.pow(5).is_identity());
            assert_eq!(x.pow(-1), x.inv());
        }
    }

    #[test]
    fn center_is_rho() {
        let p = p5();
        let z = center(p);
        assert_eq!(z.len(), 5);
        assert!(z.iter().all(|x| x.is_central()));
    }

    #[test]
    fn inventory_counts_p5() {
        let p = p5();
        let inv = subgroup_inventory(p);
        assert_eq!(inv.order_p.len(), 31);
        assert_eq!(inv.order_p2.len(), 6);
        let mut keys = inv.order_p.clone();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 31);
        for h in inv.order_p.iter().chain(inv.order_p2.iter()) {
            for x in h {
                for y in h {
                    assert!(h.binary_search(&(*x * *y)).is_ok());
                    assert_eq!(*x * *y, *y * *x);
                }
            }
        }
        assert!(inv.order_p.iter().all(|h| h.len() == 5));
        assert!(inv.order_p2.iter().all(|h| h.len() == 25));
    }

    #[test]
    fn mismatched_primes_are_rejected() {
        let x = M1Elt::sigma(p5());
        let y = M1Elt::sigma(Prime::new(7).unwrap());
        assert!(matches!(x.try_mul(&y), Err(Error::PrimeMismatch { .. })));
        assert!(M1Elt::from_residues(p5(), 5, 0, 0).is_err());
    }

    #[test]
    fn text_form_round_trip() {
        let p = p5();
        for x in elements(p) {
            assert_eq!(M1Elt::parse(p, &alloc::format!("{x}")).unwrap(), x);
        }
        assert_eq!(M1Elt::parse(p, "s t").unwrap(), M1Elt::new(p, 0, 1, 1));
        assert!(M1Elt::parse(p, "t s").is_err());
    }
}
