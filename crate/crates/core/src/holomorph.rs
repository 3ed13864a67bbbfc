//! `Hol(M1) = M1 x| Aut(M1)` acting on `M1` by `(n, f) . x = n f(x)`.

use core::fmt;
use core::ops::Mul;

use crate::automorphism::{aut_order, AutM1Elt};
use crate::error::Error;
use crate::fp::Prime;
use crate::heisenberg::M1Elt;

/// A holomorph element `n f`, i.e. translation by `n` after applying `f`.
///
/// The derived order is lexicographic on `(n.a, n.b, n.c, b1, b2, A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HolElt {
    pub n: M1Elt,
    pub alpha: AutM1Elt,
}

impl HolElt {
    pub fn new(n: M1Elt, alpha: AutM1Elt) -> Self {
        assert_eq!(
            n.prime(),
            alpha.prime(),
            "holomorph parts over different primes"
        );
        HolElt { n, alpha }
    }

    pub fn identity(p: Prime) -> Self {
        HolElt {
            n: M1Elt::identity(p),
            alpha: AutM1Elt::identity(p),
        }
    }

    pub fn translation(n: M1Elt) -> Self {
        HolElt {
            n,
            alpha: AutM1Elt::identity(n.prime()),
        }
    }

    pub fn automorphism(alpha: AutM1Elt) -> Self {
        HolElt {
            n: M1Elt::identity(alpha.prime()),
            alpha,
        }
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.n.prime()
    }

    pub fn is_identity(&self) -> bool {
        self.n.is_identity() && self.alpha.is_identity()
    }

    pub fn try_mul(&self, other: &HolElt) -> Result<HolElt, Error> {
        if self.prime() != other.prime() {
            return Err(Error::PrimeMismatch {
                left: self.prime().get(),
                right: other.prime().get(),
            });
        }
        Ok(HolElt {
            n: self.n * self.alpha.apply(&other.n),
            alpha: self.alpha.compose(&other.alpha),
        })
    }

    pub fn inv(&self) -> HolElt {
        let ai = self.alpha.inverse();
        HolElt {
            n: ai.apply(&self.n.inv()),
            alpha: ai,
        }
    }

    pub fn pow(&self, r: i64) -> HolElt {
        let base = if r < 0 { self.inv() } else { *self };
        let mut acc = HolElt::identity(self.prime());
        for _ in 0..r.unsigned_abs() {
            acc = acc * base;
        }
        acc
    }

    /// `g . x = n f(x)`.
    pub fn act(&self, x: &M1Elt) -> M1Elt {
        self.n * self.alpha.apply(x)
    }

    /// The projection onto `Aut(M1)`.
    pub fn theta(&self) -> AutM1Elt {
        self.alpha
    }

    /// Dense code in `0..p^9`, increasing with the derived order.
    #[inline]
    pub fn code(&self) -> u64 {
        let q = self.prime().as_u64();
        self.n.index() as u64 * q.pow(6) + self.alpha.code()
    }

    pub fn from_code(p: Prime, code: u64) -> Option<HolElt> {
        let q6 = p.as_u64().pow(6);
        let alpha = AutM1Elt::from_code(p, code % q6)?;
        Some(HolElt {
            n: M1Elt::from_index(p, (code / q6) as usize),
            alpha,
        })
    }
}

impl Mul for HolElt {
    type Output = HolElt;

    fn mul(self, rhs: HolElt) -> HolElt {
        self.try_mul(&rhs)
            .expect("holomorph elements over different primes")
    }
}

impl fmt::Display for HolElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.n, self.alpha)
    }
}

/// `|Hol(M1)| = p^3 |Aut(M1)|`.
pub fn hol_order(p: Prime) -> u128 {
    let q = u128::from(p.get());
    q * q * q * aut_order(p)
}

/// `f g f^-1` with `f` embedded as `(1, f)`.
pub fn conj_by_aut(f: &AutM1Elt, g: &HolElt) -> HolElt {
    HolElt {
        n: f.apply(&g.n),
        alpha: f.compose(&g.alpha).compose(&f.inverse()),
    }
}

/// Action of `alpha1^a1 alpha2^a2 alpha3^a3` on `v`:
/// `r^(a1 v2 + a2 C(v2, 2) + a3 v3) v t^(a2 v2)`.
pub fn sylow_action_closed(coords: [u16; 3], v: &M1Elt) -> M1Elt {
    let p = v.prime();
    let [a1, a2, a3] = coords;
    let shift = p.add(
        p.add(p.mul(a1, v.b), p.mul(a2, p.binom2(v.b.into()))),
        p.mul(a3, v.c),
    );
    M1Elt::new(p, i64::from(shift), 0, 0) * *v * M1Elt::tau(p).pow(p.mul(a2, v.b).into())
}

/// Action of `alpha1^r1 alpha3^r3 o alpha_B` on `v`, with everything
/// expanded into normal form.
pub fn aut_action_closed(r1: u16, r3: u16, b: &crate::automorphism::Gl2, v: &M1Elt) -> M1Elt {
    let p = v.prime();
    let [b1, b2, b3, b4] = b.a;
    let (v1, v2, v3) = (v.a, v.b, v.c);
    let s = p.add(p.mul(b1, v2), p.mul(b2, v3));
    let t = p.add(p.mul(b3, v2), p.mul(b4, v3));
    let quad = p.halve(p.add(
        p.mul(p.mul(b3, b1), p.mul(v2, v2)),
        p.mul(p.mul(b4, b2), p.mul(v3, v3)),
    ));
    let mut head = p.mul(b.det(), v1);
    head = p.add(head, quad);
    head = p.add(head, p.mul(p.mul(b2, b3), p.mul(v2, v3)));
    head = p.add(head, p.mul(r1, s));
    head = p.add(head, p.mul(r3, t));
    M1Elt::new(p, head.into(), s.into(), t.into())
}

/// `f (v alpha1^a1 alpha2^a2 alpha3^a3) f^-1` from the split form of `f`.
///
/// Only defined when `a2 = 0` or when the upper right entry of `Psi(f)`
/// vanishes; otherwise the conjugate leaves the standard Sylow subgroup.
pub fn conj_closed(f: &AutM1Elt, g: &HolElt) -> Result<HolElt, Error> {
    let p = f.prime();
    let [a1, a2, a3] = g.alpha.sylow_coords().ok_or(Error::NotSylowForm)?;
    let (r1, r3, m) = f.split();
    let [b1, b2, b3, b4] = m.a;
    let n = aut_action_closed(r1, r3, &m, &g.n);
    let coords = if a2 == 0 {
        [
            p.sub(p.mul(a1, b4), p.mul(a3, b3)),
            0,
            p.sub(p.mul(a3, b1), p.mul(a1, b2)),
        ]
    } else if b2 == 0 {
        let b1i = p
            .inv(b1)
            .expect("lower triangular matrix has unit diagonal");
        let c2 = p.mul(p.mul(a2, b1i), b4);
        let mut c1 = p.sub(p.mul(a1, b4), p.mul(a3, b3));
        c1 = p.add(c1, p.mul(r3, c2));
        c1 = p.add(c1, p.halve(p.mul(p.mul(a2, b4), p.sub(b1i, 1))));
        [c1, c2, p.mul(a3, b1)]
    } else {
        return Err(Error::NotSylowForm);
    };
    Ok(HolElt {
        n,
        alpha: AutM1Elt::from_sylow_coords(p, coords[0].into(), coords[1].into(), coords[2].into()),
    })
}

/// `g^r` for `g = v alpha1^a1 alpha2^a2 alpha3^a3`, evaluated as
/// `r^l1 v^r t^(l2 a2 v2) (alpha1^a1 alpha2^a2 alpha3^a3)^r`.
pub fn hol_pow_closed(g: &HolElt, r: u32) -> Result<HolElt, Error> {
    let p = g.prime();
    let [a1, a2, a3] = g.alpha.sylow_coords().ok_or(Error::NotSylowForm)?;
    let (v2, v3) = (g.n.b, g.n.c);
    let r = i128::from(r);
    let red = |x: i128| -> u16 { x.rem_euclid(i128::from(p.get())) as u16 };
    // sum_{j<r} j, sum_{j<r} j(j-1), sum_{j=1}^{r-2} j(j+1)
    let s1 = red(r * (r - 1) / 2);
    let s2 = red(r * (r - 1) * (r - 2) / 3);
    let s3 = if r >= 2 {
        red((r - 2) * (r - 1) * r / 3)
    } else {
        0
    };

    let mut sum_k = p.mul(p.mul(a1, v2), s1);
    sum_k = p.add(sum_k, p.halve(p.mul(p.mul(p.mul(a2, a3), v2), s2)));
    sum_k = p.add(sum_k, p.mul(p.mul(a2, p.binom2(v2.into())), s1));
    sum_k = p.add(sum_k, p.mul(p.mul(a3, v3), s1));
    let l1 = p.add(sum_k, p.halve(p.mul(p.mul(a2, p.mul(v2, v2)), s3)));
    let l2 = s1;

    let r64 = r as i64;
    let n = M1Elt::new(p, l1.into(), 0, 0)
        * g.n.pow(r64)
        * M1Elt::tau(p).pow(p.mul(p.mul(l2, a2), v2).into());
    // alpha1, alpha2, alpha3 multiply like r, s, t.
    let e = M1Elt::new(p, a1.into(), a2.into(), a3.into()).pow(r64);
    Ok(HolElt {
        n,
        alpha: AutM1Elt::from_sylow_coords(p, e.a.into(), e.b.into(), e.c.into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{enumerate_aut, Gl2};
    use crate::heisenberg;
    use alloc::vec::Vec;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn sylow_elements(p: Prime) -> Vec<HolElt> {
        let mut out = Vec::new();
        for n in heisenberg::elements(p) {
            for a1 in 0..5 {
                for a2 in 0..5 {
                    for a3 in 0..5 {
                        out.push(HolElt::new(n, AutM1Elt::from_sylow_coords(p, a1, a2, a3)));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn product_of_translations_and_automorphisms() {
        let p = p5();
        let (r, s, t) = (M1Elt::rho(p), M1Elt::sigma(p), M1Elt::tau(p));
        let (a1, a3) = (AutM1Elt::alpha1(p), AutM1Elt::alpha3(p));
        let x = HolElt::new(s, a1);
        let y = HolElt::new(t, a3);
        assert_eq!(x * y, HolElt::new(s * t, a1.compose(&a3)));
        assert_eq!(y * x, HolElt::new(r * s * t, a1.compose(&a3)));
    }

    #[test]
    fn inverse_and_action() {
        let p = p5();
        let auts = enumerate_aut(p).unwrap();
        let elts: Vec<_> = heisenberg::elements(p).collect();
        for (i, f) in auts.iter().enumerate().step_by(53) {
            let g = HolElt::new(elts[i % 125], *f);
            let h = HolElt::new(elts[(i * 7) % 125], auts[(i * 31) % auts.len()]);
            assert!((g * g.inv()).is_identity());
            assert!((g.inv() * g).is_identity());
            for x in elts.iter().step_by(11) {
                assert_eq!((g * h).act(x), g.act(&h.act(x)));
            }
        }
        let id = HolElt::identity(p);
        assert!(elts.iter().all(|x| id.act(x) == *x));
    }

    #[test]
    fn code_round_trip_and_order() {
        let p = p5();
        let auts = enumerate_aut(p).unwrap();
        let mut prev: Option<HolElt> = None;
        for (i, f) in auts.iter().enumerate().step_by(17) {
            let g = HolElt::new(M1Elt::from_index(p, i % 125), *f);
            assert_eq!(HolElt::from_code(p, g.code()), Some(g));
            if let Some(q) = prev {
                assert_eq!(q.cmp(&g), q.code().cmp(&g.code()));
            }
            prev = Some(g);
        }
        assert_eq!(hol_order(p), 125 * 12000);
    }

    #[test]
    fn sylow_action_closed_form_exhaustive() {
        let p = p5();
        for g in sylow_elements(p).iter().step_by(125) {
            let coords = g.alpha.sylow_coords().unwrap();
            for v in heisenberg::elements(p) {
                assert_eq!(sylow_action_closed(coords, &v), g.alpha.apply(&v));
            }
        }
    }

    #[test]
    fn power_closed_form_exhaustive() {
        let p = p5();
        for g in sylow_elements(p) {
            let mut acc = HolElt::identity(p);
            for r in 0..=5u32 {
                assert_eq!(hol_pow_closed(&g, r).unwrap(), acc, "g={g} r={r}");
                acc = acc * g;
            }
            assert!(hol_pow_closed(&g, 5).unwrap().is_identity());
        }
    }

    #[test]
    fn power_requires_sylow_form() {
        let p = p5();
        let g = HolElt::automorphism(AutM1Elt::from_matrix(Gl2::new(p, 2, 0, 0, 1).unwrap()));
        assert_eq!(hol_pow_closed(&g, 2), Err(Error::NotSylowForm));
    }

    #[test]
    fn aut_action_closed_form() {
        let p = p5();
        for f in enumerate_aut(p).unwrap().iter().step_by(7) {
            let (r1, r3, m) = f.split();
            for v in heisenberg::elements(p).step_by(3) {
                assert_eq!(aut_action_closed(r1, r3, &m, &v), f.apply(&v));
            }
        }
    }

    #[test]
    fn conjugation_closed_forms() {
        let p = p5();
        let auts = enumerate_aut(p).unwrap();
        let sylow = sylow_elements(p);
        let mut checked = 0;
        for (i, f) in auts.iter().enumerate().step_by(13) {
            for g in sylow.iter().skip(i % 97).step_by(389) {
                let generic = conj_by_aut(f, g);
                assert_eq!(
                    generic,
                    HolElt::automorphism(*f) * *g * HolElt::automorphism(f.inverse())
                );
                match conj_closed(f, g) {
                    Ok(c) => {
                        assert_eq!(c, generic, "f={f} g={g}");
                        checked += 1;
                    }
                    Err(_) => assert!(g.alpha.sylow_coords().unwrap()[1] != 0 && f.psi().a[1] != 0),
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn theta_is_a_homomorphism_with_translation_kernel() {
        let p = p5();
        let sylow = sylow_elements(p);
        for (i, g) in sylow.iter().enumerate().step_by(101) {
            let h = sylow[(i * 13 + 5) % sylow.len()];
            assert_eq!((*g * h).theta(), g.theta().compose(&h.theta()));
        }
        assert!(HolElt::translation(M1Elt::rho(p)).theta().is_identity());
        assert_eq!(
            HolElt::new(M1Elt::sigma(p), AutM1Elt::alpha1(p)).theta(),
            AutM1Elt::alpha1(p)
        );
    }
}
