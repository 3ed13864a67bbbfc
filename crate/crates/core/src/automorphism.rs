//! `Aut(M1) = C_p^2 x| GL_2(F_p)`.
//!
//! An automorphism is stored by the images of the generators,
//! `s -> r^b1 s^a1 t^a3` and `t -> r^b2 s^a2 t^a4`, which forces
//! `r -> r^det(A)` for `A = (a1 a2; a3 a4)`. Composition is written
//! `f.compose(g) = f o g`, i.e. `g` is applied first.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::fp::Prime;
use crate::heisenberg::M1Elt;

/// Largest prime for which the whole of `Aut(M1)` may be listed.
pub const AUT_ENUMERATION_LIMIT: u32 = 13;

/// An invertible 2x2 matrix `(a1 a2; a3 a4)` over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gl2 {
    p: Prime,
    pub a: [u16; 4],
}

impl Gl2 {
    pub fn new(p: Prime, a1: i64, a2: i64, a3: i64, a4: i64) -> Result<Self, Error> {
        let m = Gl2 {
            p,
            a: [p.reduce(a1), p.reduce(a2), p.reduce(a3), p.reduce(a4)],
        };
        if m.det() == 0 {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn identity(p: Prime) -> Self {
        Gl2 { p, a: [1, 0, 0, 1] }
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn det(&self) -> u16 {
        let p = self.p;
        let [a1, a2, a3, a4] = self.a;
        p.sub(p.mul(a1, a4), p.mul(a2, a3))
    }

    pub fn trace(&self) -> u16 {
        self.p.add(self.a[0], self.a[3])
    }

    pub fn mul(&self, o: &Gl2) -> Gl2 {
        assert_eq!(self.p, o.p, "matrices over different primes");
        let p = self.p;
        let [a1, a2, a3, a4] = self.a;
        let [b1, b2, b3, b4] = o.a;
        Gl2 {
            p,
            a: [
                p.add(p.mul(a1, b1), p.mul(a2, b3)),
                p.add(p.mul(a1, b2), p.mul(a2, b4)),
                p.add(p.mul(a3, b1), p.mul(a4, b3)),
                p.add(p.mul(a3, b2), p.mul(a4, b4)),
            ],
        }
    }

    pub fn inv(&self) -> Gl2 {
        let p = self.p;
        let d = p.inv(self.det()).expect("GL2 element is invertible");
        let [a1, a2, a3, a4] = self.a;
        Gl2 {
            p,
            a: [
                p.mul(a4, d),
                p.mul(p.neg(a2), d),
                p.mul(p.neg(a3), d),
                p.mul(a1, d),
            ],
        }
    }

    pub fn pow(&self, n: u64) -> Gl2 {
        let mut acc = Gl2::identity(self.p);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.a == [1, 0, 0, 1]
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply_vec(&self, x: u16, y: u16) -> (u16, u16) {
        let p = self.p;
        let [a1, a2, a3, a4] = self.a;
        (
            p.add(p.mul(a1, x), p.mul(a2, y)),
            p.add(p.mul(a3, x), p.mul(a4, y)),
        )
    }

    /// Every invertible matrix, in lexicographic order of `(a1, a2, a3, a4)`.
    pub fn all(p: Prime) -> Vec<Gl2> {
        let mut out = Vec::new();
        for a1 in p.residues() {
            for a2 in p.residues() {
                for a3 in p.residues() {
                    for a4 in p.residues() {
                        let m = Gl2 {
                            p,
                            a: [a1, a2, a3, a4],
                        };
                        if m.det() != 0 {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }
}

/// `|GL_2(F_p)| = (p^2 - 1)(p^2 - p)`.
pub fn gl2_order(p: Prime) -> u128 {
    let q = u128::from(p.get());
    (q * q - 1) * (q * q - q)
}

/// `|Aut(M1)| = (p^2 - 1)(p - 1) p^3`.
pub fn aut_order(p: Prime) -> u128 {
    let q = u128::from(p.get());
    (q * q - 1) * (q - 1) * q * q * q
}

/// `|Aut(C_p^3)| = |GL_3(F_p)|`.
pub fn gl3_order(p: Prime) -> u128 {
    let q = u128::from(p.get());
    (q * q * q - 1) * (q * q * q - q) * (q * q * q - q * q)
}

/// An automorphism of `M1` in bracket form `[det A, b1, b2; 0, A]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AutM1Elt {
    pub b1: u16,
    pub b2: u16,
    pub m: Gl2,
}

impl AutM1Elt {
    pub fn new(b1: i64, b2: i64, m: Gl2) -> Self {
        let p = m.prime();
        AutM1Elt {
            b1: p.reduce(b1),
            b2: p.reduce(b2),
            m,
        }
    }

    pub fn identity(p: Prime) -> Self {
        AutM1Elt {
            b1: 0,
            b2: 0,
            m: Gl2::identity(p),
        }
    }

    /// `s -> r s`, `t -> t` (conjugation by `t`).
    pub fn alpha1(p: Prime) -> Self {
        AutM1Elt::new(1, 0, Gl2::identity(p))
    }

    /// `s -> s t`, `t -> t`.
    pub fn alpha2(p: Prime) -> Self {
        AutM1Elt::new(0, 0, Gl2 { p, a: [1, 0, 1, 1] })
    }

    /// `s -> s`, `t -> r t` (conjugation by `s^-1`).
    pub fn alpha3(p: Prime) -> Self {
        AutM1Elt::new(0, 1, Gl2::identity(p))
    }

    /// Alias of [`AutM1Elt::alpha3`].
    pub fn beta(p: Prime) -> Self {
        Self::alpha3(p)
    }

    /// Alias of [`AutM1Elt::alpha1`].
    pub fn gamma(p: Prime) -> Self {
        Self::alpha1(p)
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.m.prime()
    }

    pub fn is_identity(&self) -> bool {
        self.b1 == 0 && self.b2 == 0 && self.m.is_identity()
    }

    /// Image of `s`.
    pub fn sigma_image(&self) -> M1Elt {
        let [a1, _, a3, _] = self.m.a;
        M1Elt::new(self.prime(), self.b1.into(), a1.into(), a3.into())
    }

    /// Image of `t`.
    pub fn tau_image(&self) -> M1Elt {
        let [_, a2, _, a4] = self.m.a;
        M1Elt::new(self.prime(), self.b2.into(), a2.into(), a4.into())
    }

    /// `r^x.a s^x.b t^x.c -> (r^det)^x.a (s^f)^x.b (t^f)^x.c`.
    pub fn apply(&self, x: &M1Elt) -> M1Elt {
        let p = self.prime();
        assert_eq!(
            p,
            x.prime(),
            "automorphism and element over different primes"
        );
        let r = M1Elt::new(p, i64::from(p.mul(self.m.det(), x.a)), 0, 0);
        r * self.sigma_image().pow(x.b.into()) * self.tau_image().pow(x.c.into())
    }

    /// Reads an automorphism off prescribed images of `s` and `t`.
    pub fn from_images(s_img: M1Elt, t_img: M1Elt) -> Result<Self, Error> {
        let p = s_img.prime();
        let m = Gl2::new(
            p,
            s_img.b.into(),
            t_img.b.into(),
            s_img.c.into(),
            t_img.c.into(),
        )?;
        Ok(AutM1Elt {
            b1: s_img.a,
            b2: t_img.a,
            m,
        })
    }

    /// `self o other`, computed from the images of the generators.
    pub fn compose(&self, other: &AutM1Elt) -> AutM1Elt {
        let s_img = self.apply(&other.sigma_image());
        let t_img = self.apply(&other.tau_image());
        AutM1Elt {
            b1: s_img.a,
            b2: t_img.a,
            m: self.m.mul(&other.m),
        }
    }

    /// `self o other` by multiplying the bracket matrices and adding the
    /// quadratic correction terms `C1`, `C2`.
    pub fn compose_bracket(&self, other: &AutM1Elt) -> AutM1Elt {
        let p = self.prime();
        let (det, [a1, a2, a3, a4]) = (self.m.det(), self.m.a);
        let [c1, c2, c3, c4] = other.m.a;
        let (e1, e2) = (other.b1, other.b2);
        // top row of the 3x3 product
        let top1 = p.add(
            p.add(p.mul(det, e1), p.mul(self.b1, c1)),
            p.mul(self.b2, c3),
        );
        let top2 = p.add(
            p.add(p.mul(det, e2), p.mul(self.b1, c2)),
            p.mul(self.b2, c4),
        );
        let h = |x: u16| p.binom2(x.into());
        let corr1 = p.add(
            p.add(p.mul(p.mul(a1, a3), h(c1)), p.mul(p.mul(a2, a4), h(c3))),
            p.mul(p.mul(a3, c1), p.mul(a2, c3)),
        );
        let corr2 = p.add(
            p.add(p.mul(p.mul(a1, a3), h(c2)), p.mul(p.mul(a2, a4), h(c4))),
            p.mul(p.mul(a3, c2), p.mul(a2, c4)),
        );
        AutM1Elt {
            b1: p.add(top1, corr1),
            b2: p.add(top2, corr2),
            m: self.m.mul(&other.m),
        }
    }

    pub fn inverse(&self) -> AutM1Elt {
        let p = self.prime();
        let mi = self.m.inv();
        let det_inv = p
            .inv(self.m.det())
            .expect("automorphism has unit determinant");
        // Solve f(r^x s^u t^v) = s (resp. t) for the central exponent x.
        let solve = |u: u16, v: u16| -> u16 {
            let img = self.apply(&M1Elt::new(p, 0, u.into(), v.into()));
            p.mul(p.neg(img.a), det_inv)
        };
        let [i1, i2, i3, i4] = mi.a;
        AutM1Elt {
            b1: solve(i1, i3),
            b2: solve(i2, i4),
            m: mi,
        }
    }

    pub fn pow(&self, n: i64) -> AutM1Elt {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut acc = AutM1Elt::identity(self.prime());
        for _ in 0..n.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// `self o other o self^-1`.
    pub fn conjugate(&self, other: &AutM1Elt) -> AutM1Elt {
        self.compose(other).compose(&self.inverse())
    }

    /// The section `A -> alpha_A = [det A, ac/2, bd/2; 0, A]` for `A = (a b; c d)`.
    pub fn from_matrix(m: Gl2) -> AutM1Elt {
        let p = m.prime();
        let [a, b, c, d] = m.a;
        AutM1Elt {
            b1: p.halve(p.mul(a, c)),
            b2: p.halve(p.mul(b, d)),
            m,
        }
    }

    /// Projection onto `Aut(M1 / Z) = GL_2(F_p)`.
    pub fn psi(&self) -> Gl2 {
        self.m
    }

    /// Writes `self = a1^r1 a3^r3 o alpha_A` and returns `(r1, r3, A)`.
    pub fn split(&self) -> (u16, u16, Gl2) {
        let g = self.compose(&AutM1Elt::from_matrix(self.m).inverse());
        debug_assert!(g.m.is_identity());
        (g.b1, g.b2, self.m)
    }

    /// `a1^r1 a3^r3 o alpha_A`.
    pub fn from_split(r1: i64, r3: i64, m: Gl2) -> AutM1Elt {
        let p = m.prime();
        AutM1Elt::new(r1, r3, Gl2::identity(p)).compose(&AutM1Elt::from_matrix(m))
    }

    /// Exponents `(a1, a2, a3)` with `self = alpha1^a1 alpha2^a2 alpha3^a3`,
    /// if `self` lies in that Sylow subgroup.
    pub fn sylow_coords(&self) -> Option<[u16; 3]> {
        match self.m.a {
            [1, 0, x, 1] => Some([self.b1, x, self.b2]),
            _ => None,
        }
    }

    pub fn from_sylow_coords(p: Prime, a1: i64, a2: i64, a3: i64) -> AutM1Elt {
        AutM1Elt {
            b1: p.reduce(a1),
            b2: p.reduce(a3),
            m: Gl2 {
                p,
                a: [1, 0, p.reduce(a2), 1],
            },
        }
    }

    /// Lexicographic code over `(b1, b2, a1, a2, a3, a4)`, dense in `0..p^6`.
    #[inline]
    pub fn code(&self) -> u64 {
        let q = self.prime().as_u64();
        let mut c = 0u64;
        for v in [
            self.b1,
            self.b2,
            self.m.a[0],
            self.m.a[1],
            self.m.a[2],
            self.m.a[3],
        ] {
            c = c * q + u64::from(v);
        }
        c
    }

    pub fn from_code(p: Prime, mut code: u64) -> Option<AutM1Elt> {
        let q = p.as_u64();
        let mut v = [0u16; 6];
        for slot in v.iter_mut().rev() {
            *slot = (code % q) as u16;
            code /= q;
        }
        let m = Gl2 {
            p,
            a: [v[2], v[3], v[4], v[5]],
        };
        (m.det() != 0).then_some(AutM1Elt {
            b1: v[0],
            b2: v[1],
            m,
        })
    }
}

impl fmt::Display for AutM1Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4] = self.m.a;
        write!(
            f,
            "[{} {} {}; 0 {} {}; 0 {} {}]",
            self.m.det(),
            self.b1,
            self.b2,
            a1,
            a2,
            a3,
            a4
        )
    }
}

/// Every automorphism of `M1`, sorted by [`AutM1Elt::code`].
pub fn enumerate_aut(p: Prime) -> Result<Vec<AutM1Elt>, Error> {
    if p.get() > AUT_ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "Aut(M1) enumeration",
            p: p.get(),
            limit: AUT_ENUMERATION_LIMIT,
        });
    }
    let gl = Gl2::all(p);
    let mut out = Vec::with_capacity((aut_order(p)) as usize);
    for b1 in p.residues() {
        for b2 in p.residues() {
            for m in &gl {
                out.push(AutM1Elt { b1, b2, m: *m });
            }
        }
    }
    Ok(out)
}

/// A small generating set of `Aut(M1)`: the two inner generators and the
/// section images of generators of `GL_2(F_p)`.
pub fn aut_generators(p: Prime) -> Vec<AutM1Elt> {
    let g = primitive_root(p);
    let mats = [
        Gl2 { p, a: [1, 1, 0, 1] },
        Gl2 { p, a: [1, 0, 1, 1] },
        Gl2 { p, a: [g, 0, 0, 1] },
    ];
    let mut gens = alloc::vec![AutM1Elt::alpha1(p), AutM1Elt::alpha3(p)];
    gens.extend(mats.into_iter().map(AutM1Elt::from_matrix));
    gens
}

pub fn primitive_root(p: Prime) -> u16 {
    let q = p.as_u64() - 1;
    let mut factors = Vec::new();
    let mut n = q;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    p.units()
        .find(|&g| factors.iter().all(|f| p.pow(g, q / f) != 1))
        .expect("F_p^* is cyclic")
}

/// The `p + 1` Sylow `p`-subgroups of `GL_2(F_p)`, each the conjugate of
/// `<(1 0; 1 1)>` by some matrix. The lower unitriangular one comes first,
/// the rest are sorted.
pub fn sylow_p_subgroups_gl2(p: Prime) -> Vec<Vec<Gl2>> {
    let unipotent = Gl2 { p, a: [1, 0, 1, 1] };
    let cyclic = |m: Gl2| -> Vec<Gl2> {
        let mut v: Vec<Gl2> = (0..p.as_u64()).map(|k| m.pow(k)).collect();
        v.sort();
        v
    };
    let first = cyclic(unipotent);
    let mut rest: Vec<Vec<Gl2>> = Vec::new();
    for b in Gl2::all(p) {
        let h = cyclic(b.mul(&unipotent).mul(&b.inv()));
        if h != first && !rest.contains(&h) {
            rest.push(h);
        }
    }
    rest.sort();
    let mut out = alloc::vec![first];
    out.extend(rest);
    out
}

/// The Sylow `p`-subgroups of `Aut(M1)`: `C_p^2 x| S` for each Sylow `S`
/// of `GL_2`, in the order of [`sylow_p_subgroups_gl2`]. Each is sorted.
pub fn sylow_p_subgroups_aut(p: Prime) -> Vec<Vec<AutM1Elt>> {
    sylow_p_subgroups_gl2(p)
        .into_iter()
        .map(|mats| {
            let mut v = Vec::with_capacity(mats.len() * (p.get() * p.get()) as usize);
            for m in mats {
                let sec = AutM1Elt::from_matrix(m);
                for r1 in p.residues() {
                    for r3 in p.residues() {
                        v.push(AutM1Elt::new(r1.into(), r3.into(), Gl2::identity(p)).compose(&sec));
                    }
                }
            }
            v.sort();
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn pointwise_eq(f: &AutM1Elt, g: impl Fn(&M1Elt) -> M1Elt) -> bool {
        heisenberg::elements(f.prime()).all(|x| f.apply(&x) == g(&x))
    }

    #[test]
    fn named_automorphisms() {
        let p = p5();
        let (s, t, r) = (M1Elt::sigma(p), M1Elt::tau(p), M1Elt::rho(p));
        assert_eq!(AutM1Elt::gamma(p).apply(&s), r * s);
        assert_eq!(AutM1Elt::gamma(p).apply(&t), t);
        assert_eq!(AutM1Elt::beta(p).apply(&t), r * t);
        assert_eq!(AutM1Elt::alpha2(p).apply(&s), s * t);
        let id = AutM1Elt::identity(p);
        assert!(heisenberg::elements(p).all(|x| id.apply(&x) == x));
    }

    #[test]
    fn alpha1_alpha3_are_inner() {
        let p = p5();
        let (s, t) = (M1Elt::sigma(p), M1Elt::tau(p));
        assert!(pointwise_eq(&AutM1Elt::alpha1(p), |x| t * *x * t.inv()));
        assert!(pointwise_eq(&AutM1Elt::alpha3(p), |x| s.inv() * *x * s));
    }

    #[test]
    fn sylow_relations() {
        let p = p5();
        let (a1, a2, a3) = (
            AutM1Elt::alpha1(p),
            AutM1Elt::alpha2(p),
            AutM1Elt::alpha3(p),
        );
        assert_eq!(a2.compose(&a1), a1.compose(&a2));
        assert_eq!(a3.compose(&a1), a1.compose(&a3));
        assert_eq!(a3.compose(&a2), a1.compose(&a2).compose(&a3));
        for a in [a1, a2, a3] {
            assert!(a.pow(5).is_identity());
        }
        assert_eq!(a1.inverse(), a1.pow(4));
    }

    #[test]
    fn enumeration_counts() {
        let p = p5();
        let all = enumerate_aut(p).unwrap();
        assert_eq!(all.len(), 12000);
        assert_eq!(all.len() as u128, aut_order(p));
        assert_eq!(aut_order(Prime::new(7).unwrap()), 98784);
        assert!(enumerate_aut(Prime::new(17).unwrap()).is_err());
        assert!(all.windows(2).all(|w| w[0].code() < w[1].code()));
    }

    #[test]
    fn every_enumerated_map_is_an_automorphism_sampled() {
        let p = p5();
        let all = enumerate_aut(p).unwrap();
        let elts: Vec<_> = heisenberg::elements(p).collect();
        for f in all.iter().step_by(97) {
            let mut images: Vec<_> = elts.iter().map(|x| f.apply(x)).collect();
            for x in elts.iter().step_by(7) {
                for y in &elts {
                    assert_eq!(f.apply(&(*x * *y)), f.apply(x) * f.apply(y));
                }
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), 125);
        }
    }

    #[test]
    fn composition_is_pointwise() {
        let p = p5();
        let all = enumerate_aut(p).unwrap();
        let elts: Vec<_> = heisenberg::elements(p).collect();
        for (i, f) in all.iter().step_by(101).enumerate() {
            let g = all[(i * 7919 + 13) % all.len()];
            let fg = f.compose(&g);
            for x in elts.iter().step_by(3) {
                assert_eq!(fg.apply(x), f.apply(&g.apply(x)));
            }
        }
    }

    #[test]
    fn inverse_matches_search() {
        let p = p5();
        let all = enumerate_aut(p).unwrap();
        for f in all.iter().step_by(499) {
            let inv = f.inverse();
            assert!(f.compose(&inv).is_identity());
            assert!(inv.compose(f).is_identity());
            // brute-force: the unique g with g(f(s)) = s and g(f(t)) = t
            let found: Vec<_> = all
                .iter()
                .filter(|g| {
                    g.apply(&f.sigma_image()) == M1Elt::sigma(p)
                        && g.apply(&f.tau_image()) == M1Elt::tau(p)
                })
                .collect();
            assert_eq!(found, [&inv]);
        }
    }

    #[test]
    fn section_is_a_homomorphism_and_splits_psi() {
        let p = p5();
        let gl = Gl2::all(p);
        assert!(AutM1Elt::from_matrix(Gl2::identity(p)).is_identity());
        for (i, a) in gl.iter().enumerate().step_by(3) {
            let b = gl[(i * 31 + 7) % gl.len()];
            assert_eq!(
                AutM1Elt::from_matrix(*a).compose(&AutM1Elt::from_matrix(b)),
                AutM1Elt::from_matrix(a.mul(&b))
            );
        }
        for a in &gl {
            assert_eq!(AutM1Elt::from_matrix(*a).psi(), *a);
        }
        assert!(Gl2::new(p, 1, 2, 2, 4).is_err());
    }

    #[test]
    fn kernel_of_psi_is_inner() {
        let p = p5();
        let kernel: Vec<_> = enumerate_aut(p)
            .unwrap()
            .into_iter()
            .filter(|f| f.psi().is_identity())
            .collect();
        assert_eq!(kernel.len(), 25);
        let inner: Vec<_> = heisenberg::elements(p)
            .map(|g| {
                AutM1Elt::from_images(g * M1Elt::sigma(p) * g.inv(), g * M1Elt::tau(p) * g.inv())
                    .unwrap()
            })
            .collect();
        for k in &kernel {
            assert!(inner.contains(k));
        }
        assert_eq!(AutM1Elt::alpha1(p).psi(), Gl2::identity(p));
    }

    #[test]
    fn semidirect_action_law_exhaustive() {
        let p = p5();
        let (a1, a3) = (AutM1Elt::alpha1(p), AutM1Elt::alpha3(p));
        for m in Gl2::all(p) {
            let s = AutM1Elt::from_matrix(m);
            let [x1, x2, x3, x4] = m.a.map(i64::from);
            assert_eq!(s.conjugate(&a1), a1.pow(x4).compose(&a3.pow(-x2)));
            assert_eq!(s.conjugate(&a3), a1.pow(-x3).compose(&a3.pow(x1)));
        }
    }

    #[test]
    fn split_round_trip() {
        let p = p5();
        for f in enumerate_aut(p).unwrap().iter().step_by(37) {
            let (r1, r3, m) = f.split();
            assert_eq!(AutM1Elt::from_split(r1.into(), r3.into(), m), *f);
        }
    }

    #[test]
    fn sylow_coordinates() {
        let p = p5();
        let (a1, a2, a3) = (
            AutM1Elt::alpha1(p),
            AutM1Elt::alpha2(p),
            AutM1Elt::alpha3(p),
        );
        for x in 0..5 {
            for y in 0..5 {
                for z in 0..5 {
                    let prod = a1.pow(x).compose(&a2.pow(y)).compose(&a3.pow(z));
                    assert_eq!(prod, AutM1Elt::from_sylow_coords(p, x, y, z));
                    assert_eq!(prod.sylow_coords(), Some([x as u16, y as u16, z as u16]));
                }
            }
        }
    }

    #[test]
    fn gl2_sylows() {
        let p = p5();
        let sylows = sylow_p_subgroups_gl2(p);
        assert_eq!(sylows.len(), 6);
        for s in &sylows {
            assert_eq!(s.len(), 5);
            assert!(s
                .iter()
                .filter(|m| !m.is_identity())
                .all(|m| m.trace() == 2));
        }
        let order_p: Vec<_> = Gl2::all(p)
            .into_iter()
            .filter(|m| !m.is_identity() && m.pow(5).is_identity())
            .collect();
        assert_eq!(order_p.len(), 24);
        for m in &order_p {
            assert_eq!(sylows.iter().filter(|s| s.contains(m)).count(), 1);
        }
        let aut_sylows = sylow_p_subgroups_aut(p);
        assert_eq!(aut_sylows.len(), 6);
        assert!(aut_sylows.iter().all(|s| s.len() == 125));
        let std: Vec<_> = {
            let mut v = Vec::new();
            for x in 0..5 {
                for y in 0..5 {
                    for z in 0..5 {
                        v.push(AutM1Elt::from_sylow_coords(p, x, y, z));
                    }
                }
            }
            v.sort();
            v
        };
        assert_eq!(aut_sylows[0], std);
    }

    #[test]
    fn bracket_composition_agrees_sampled() {
        let p = p5();
        let all = enumerate_aut(p).unwrap();
        for (i, f) in all.iter().enumerate().step_by(7) {
            for g in all.iter().skip(i % 13).step_by(41) {
                assert_eq!(f.compose_bracket(g), f.compose(g), "{f} o {g}");
            }
        }
    }

    #[test]
    fn code_round_trip() {
        let p = p5();
        for f in enumerate_aut(p).unwrap().iter().step_by(11) {
            assert_eq!(AutM1Elt::from_code(p, f.code()), Some(*f));
        }
    }

    #[test]
    fn generators_generate() {
        let p = p5();
        let gens = aut_generators(p);
        let mut seen = alloc::collections::BTreeSet::new();
        let mut frontier = alloc::vec![AutM1Elt::identity(p)];
        seen.insert(AutM1Elt::identity(p));
        while let Some(f) = frontier.pop() {
            for g in &gens {
                let h = g.compose(&f);
                if seen.insert(h) {
                    frontier.push(h);
                }
            }
        }
        assert_eq!(seen.len(), 12000);
    }
}
