//! Parametrised families of regular subgroups inside the standard Sylow
//! subgroup `M1 x| <alpha1, alpha2, alpha3>`, and one representative per
//! conjugacy class.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::automorphism::{aut_order, AutM1Elt, Gl2};
use crate::error::Error;
use crate::fp::Prime;
use crate::heisenberg::M1Elt;
use crate::holomorph::{conj_by_aut, HolElt};
use crate::subgroup::{GroupType, SubgroupHol};

/// Order of the image of a regular subgroup in `Aut(M1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThetaSize {
    One,
    P,
    P2,
    P3,
}

impl ThetaSize {
    pub const ALL: [ThetaSize; 4] = [ThetaSize::One, ThetaSize::P, ThetaSize::P2, ThetaSize::P3];

    pub fn exponent(self) -> u32 {
        match self {
            ThetaSize::One => 0,
            ThetaSize::P => 1,
            ThetaSize::P2 => 2,
            ThetaSize::P3 => 3,
        }
    }

    pub fn order(self, p: Prime) -> usize {
        p.as_u64().pow(self.exponent()) as usize
    }

    pub fn from_order(p: Prime, n: usize) -> Option<ThetaSize> {
        ThetaSize::ALL.into_iter().find(|t| t.order(p) == n)
    }

    pub fn label(self) -> &'static str {
        match self {
            ThetaSize::One => "1",
            ThetaSize::P => "p",
            ThetaSize::P2 => "p2",
            ThetaSize::P3 => "p3",
        }
    }

    pub fn from_label(s: &str) -> Option<ThetaSize> {
        ThetaSize::ALL.into_iter().find(|t| t.label() == s)
    }
}

impl fmt::Display for ThetaSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which printed family a member comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyCase {
    /// `<r, t, s alpha1^a1 alpha2^a2 alpha3^a3>`.
    ThetaP,
    /// `<r, u alpha1, v alpha3>` with `(u | v)` invertible.
    CaseI,
    /// `<r, t^x3 alpha1, s^y2 t^y3 alpha2 alpha3^a>`.
    CaseII,
    /// `<r^u1 t^-2 alpha1, r^v1 t^(1-u1) alpha2, r^w1 s^2 t^w3 alpha3>`.
    ThetaP3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub theta: ThetaSize,
    pub case: FamilyCase,
    pub values: Vec<(&'static str, u16)>,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub params: FamilyParams,
    pub generators: Vec<HolElt>,
    /// The isomorphism type predicted by the family's abelianness criterion.
    pub expected: GroupType,
}

impl FamilyMember {
    pub fn subgroup(&self) -> Result<SubgroupHol, Error> {
        let p = self.generators[0].prime();
        SubgroupHol::generate(p, &self.generators)
    }
}

/// A named conjugacy class representative.
#[derive(Clone, Debug)]
pub struct Representative {
    pub id: String,
    pub theta: ThetaSize,
    pub expected: GroupType,
    pub generators: Vec<HolElt>,
    /// `|Aut_Br|` as predicted by the stabiliser shape of the family.
    pub predicted_autbr_order: u128,
}

impl Representative {
    pub fn subgroup(&self) -> Result<SubgroupHol, Error> {
        let p = self.generators[0].prime();
        SubgroupHol::generate(p, &self.generators)
    }
}

fn m1(p: Prime, a: i64, b: i64, c: i64) -> M1Elt {
    M1Elt::new(p, a, b, c)
}

fn sy(p: Prime, a1: i64, a2: i64, a3: i64) -> AutM1Elt {
    AutM1Elt::from_sylow_coords(p, a1, a2, a3)
}

fn hol(n: M1Elt, f: AutM1Elt) -> HolElt {
    HolElt::new(n, f)
}

fn rho(p: Prime) -> HolElt {
    HolElt::translation(M1Elt::rho(p))
}

fn tau(p: Prime) -> HolElt {
    HolElt::translation(M1Elt::tau(p))
}

/// The left translations `{(n, id)}`.
pub fn trivial_subgroup(p: Prime) -> SubgroupHol {
    SubgroupHol::translations(p)
}

pub fn trivial_representative(p: Prime) -> Representative {
    Representative {
        id: String::from("r=1/trivial"),
        theta: ThetaSize::One,
        expected: GroupType::HeisenbergM1,
        generators: SubgroupHol::translations(p).generators().to_vec(),
        predicted_autbr_order: aut_order(p),
    }
}

fn theta_p_gens(p: Prime, a1: i64, a2: i64, a3: i64) -> Vec<HolElt> {
    alloc::vec![rho(p), tau(p), hol(M1Elt::sigma(p), sy(p, a1, a2, a3))]
}

/// All `<r, t, s alpha1^a1 alpha2^a2 alpha3^a3>` with `(a1, a2, a3) != 0`,
/// and the `2p` representatives.
pub fn families_theta_p(p: Prime) -> (Vec<FamilyMember>, Vec<Representative>) {
    let mut members = Vec::new();
    for a1 in p.residues() {
        for a2 in p.residues() {
            for a3 in p.residues() {
                if (a1, a2, a3) == (0, 0, 0) {
                    continue;
                }
                members.push(FamilyMember {
                    params: FamilyParams {
                        theta: ThetaSize::P,
                        case: FamilyCase::ThetaP,
                        values: alloc::vec![("a1", a1), ("a2", a2), ("a3", a3)],
                    },
                    generators: theta_p_gens(p, a1.into(), a2.into(), a3.into()),
                    expected: if a3 == 1 {
                        GroupType::ElemAbelianP3
                    } else {
                        GroupType::HeisenbergM1
                    },
                });
            }
        }
    }
    let q = u128::from(p.get());
    let mut reps = Vec::new();
    for c in p.units() {
        reps.push(Representative {
            id: format!("r=p/caseA/c={c}"),
            theta: ThetaSize::P,
            expected: if c == 1 {
                GroupType::ElemAbelianP3
            } else {
                GroupType::HeisenbergM1
            },
            generators: theta_p_gens(p, 0, 0, c.into()),
            predicted_autbr_order: (q - 1) * (q - 1) * q * q,
        });
    }
    for c in p.units() {
        reps.push(Representative {
            id: format!("r=p/caseB/c={c}"),
            theta: ThetaSize::P,
            expected: if c == 1 {
                GroupType::ElemAbelianP3
            } else {
                GroupType::HeisenbergM1
            },
            generators: theta_p_gens(p, 0, 1, c.into()),
            predicted_autbr_order: (q - 1) * q * q,
        });
    }
    reps.push(Representative {
        id: String::from("r=p/caseC"),
        theta: ThetaSize::P,
        expected: GroupType::HeisenbergM1,
        generators: theta_p_gens(p, 1, 0, 0),
        predicted_autbr_order: (q - 1) * q * q * q,
    });
    reps.push(Representative {
        id: String::from("r=p/caseD"),
        theta: ThetaSize::P,
        expected: GroupType::HeisenbergM1,
        generators: theta_p_gens(p, 0, 1, 0),
        predicted_autbr_order: (q - 1) * q * q,
    });
    (members, reps)
}

fn case_i_gens(p: Prime, u2: i64, u3: i64, v2: i64, v3: i64) -> Vec<HolElt> {
    alloc::vec![
        rho(p),
        hol(m1(p, 0, u2, u3), AutM1Elt::alpha1(p)),
        hol(m1(p, 0, v2, v3), AutM1Elt::alpha3(p)),
    ]
}

fn case_ii_gens(p: Prime, x3: i64, y2: i64, y3: i64, a: i64) -> Vec<HolElt> {
    alloc::vec![
        rho(p),
        hol(m1(p, 0, 0, x3), AutM1Elt::alpha1(p)),
        hol(m1(p, 0, y2, y3), sy(p, 0, 1, a)),
    ]
}

/// Case I, Case II, and the `2p^2 - p - 1` representatives.
pub fn families_theta_p2(p: Prime) -> (Vec<FamilyMember>, Vec<FamilyMember>, Vec<Representative>) {
    let mut case_i = Vec::new();
    for m in Gl2::all(p) {
        let [u2, v2, u3, v3] = m.a;
        let abelian = v2 == p.add(u3, m.det());
        case_i.push(FamilyMember {
            params: FamilyParams {
                theta: ThetaSize::P2,
                case: FamilyCase::CaseI,
                values: alloc::vec![("u2", u2), ("u3", u3), ("v2", v2), ("v3", v3)],
            },
            generators: case_i_gens(p, u2.into(), u3.into(), v2.into(), v3.into()),
            expected: if abelian {
                GroupType::ElemAbelianP3
            } else {
                GroupType::HeisenbergM1
            },
        });
    }
    let mut case_ii = Vec::new();
    for x3 in p.units() {
        for y2 in p.units() {
            for y3 in p.residues() {
                for a in p.residues() {
                    let abelian = y2 == p.sub(p.mul(a, x3), p.mul(x3, y2));
                    case_ii.push(FamilyMember {
                        params: FamilyParams {
                            theta: ThetaSize::P2,
                            case: FamilyCase::CaseII,
                            values: alloc::vec![("x3", x3), ("y2", y2), ("y3", y3), ("a", a)],
                        },
                        generators: case_ii_gens(p, x3.into(), y2.into(), y3.into(), a.into()),
                        expected: if abelian {
                            GroupType::ElemAbelianP3
                        } else {
                            GroupType::HeisenbergM1
                        },
                    });
                }
            }
        }
    }

    let q = u128::from(p.get());
    let mut reps = Vec::new();
    for s in p.residues() {
        for t in p.units() {
            let disc = p.sub(p.mul(s, s), p.mul(4, t));
            let predicted = if disc == 0 {
                (q - 1) * q * q * q
            } else if p.is_square(disc) {
                (q - 1) * (q - 1) * q * q
            } else {
                (q * q - 1) * q * q
            };
            reps.push(Representative {
                id: format!("r=p2/I/s={s},t={t}"),
                theta: ThetaSize::P2,
                expected: if s == t {
                    GroupType::ElemAbelianP3
                } else {
                    GroupType::HeisenbergM1
                },
                generators: case_i_gens(p, 1, 0, s.into(), t.into()),
                predicted_autbr_order: predicted,
            });
        }
    }
    for u5 in p.units() {
        let u = i64::from(u5);
        reps.push(Representative {
            id: format!("r=p2/I'/u5={u5}"),
            theta: ThetaSize::P2,
            expected: if u5 == 2 {
                GroupType::ElemAbelianP3
            } else {
                GroupType::HeisenbergM1
            },
            generators: case_i_gens(p, 0, -u, u, 0),
            predicted_autbr_order: aut_order(p),
        });
    }
    for x3 in p.units() {
        let special = p.mul(p.add(1, x3), p.inv(x3).expect("x3 is a unit"));
        for a in p.residues() {
            reps.push(Representative {
                id: format!("r=p2/II/x3={x3},a={a}"),
                theta: ThetaSize::P2,
                expected: if a == special {
                    GroupType::ElemAbelianP3
                } else {
                    GroupType::HeisenbergM1
                },
                generators: case_ii_gens(p, x3.into(), 1, 0, a.into()),
                predicted_autbr_order: (q - 1) * q * q,
            });
        }
    }
    (case_i, case_ii, reps)
}

fn theta_p3_gens(p: Prime, u1: i64, v1: i64, w1: i64, w3: i64) -> Vec<HolElt> {
    alloc::vec![
        hol(m1(p, u1, 0, -2), AutM1Elt::alpha1(p)),
        hol(m1(p, v1, 0, 1 - u1), AutM1Elt::alpha2(p)),
        hol(m1(p, w1, 2, w3), AutM1Elt::alpha3(p)),
    ]
}

/// The `(p - 1) p^3` members with full image in the standard Sylow
/// subgroup, and the four representatives.
pub fn families_theta_p3(p: Prime) -> (Vec<FamilyMember>, Vec<Representative>) {
    let mut members = Vec::new();
    for u1 in p.residues() {
        for v1 in p.residues() {
            let twist = p.add(v1, p.halve(p.mul(u1, p.sub(1, u1))));
            if twist == 0 {
                continue;
            }
            for w1 in p.residues() {
                for w3 in p.residues() {
                    members.push(FamilyMember {
                        params: FamilyParams {
                            theta: ThetaSize::P3,
                            case: FamilyCase::ThetaP3,
                            values: alloc::vec![("u1", u1), ("v1", v1), ("w1", w1), ("w3", w3)],
                        },
                        generators: theta_p3_gens(p, u1.into(), v1.into(), w1.into(), w3.into()),
                        expected: GroupType::HeisenbergM1,
                    });
                }
            }
        }
    }
    let delta = p.smallest_nonresidue();
    let q = u128::from(p.get());
    let mut reps = Vec::new();
    for t3 in [0u16, 1] {
        for (label, s) in [("1", 1u16), ("delta", delta)] {
            reps.push(Representative {
                id: format!("r=p3/t3={t3}/s={label}"),
                theta: ThetaSize::P3,
                expected: GroupType::HeisenbergM1,
                generators: alloc::vec![
                    hol(m1(p, 0, 0, -2), AutM1Elt::alpha1(p)),
                    hol(m1(p, s.into(), 0, 1), AutM1Elt::alpha2(p)),
                    hol(m1(p, 0, 2, t3.into()), AutM1Elt::alpha3(p)),
                ],
                predicted_autbr_order: if t3 == 0 { 2 * (q - 1) * q } else { 2 * q },
            });
        }
    }
    (members, reps)
}

/// The subcase `s`-exponent `0` of the `|Theta| = p^3` analysis:
/// `<r^u1 alpha1, r^v1 t^u1 alpha2, r^w1 t^w3 alpha3>`.
pub fn theta_p3_degenerate(p: Prime, u1: i64, v1: i64, w1: i64, w3: i64) -> Vec<HolElt> {
    alloc::vec![
        hol(m1(p, u1, 0, 0), AutM1Elt::alpha1(p)),
        hol(m1(p, v1, 0, u1), AutM1Elt::alpha2(p)),
        hol(m1(p, w1, 0, w3), AutM1Elt::alpha3(p)),
    ]
}

/// `(d -1; 1-d 1)`, which carries `<r, s t^d>` onto `<r, t>`.
pub fn pairing_matrix(p: Prime, d: u16) -> Gl2 {
    Gl2::new(p, d.into(), -1, 1 - i64::from(d), 1).expect("determinant is 1")
}

/// Every representative, ordered by `|Theta|` and then as constructed.
pub fn all_representatives(p: Prime) -> Vec<Representative> {
    let mut reps = alloc::vec![trivial_representative(p)];
    reps.extend(families_theta_p(p).1);
    reps.extend(families_theta_p2(p).2);
    reps.extend(families_theta_p3(p).1);
    reps
}

pub fn representative_by_id(p: Prime, id: &str) -> Result<Representative, Error> {
    all_representatives(p)
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownRepresentative(String::from(id)))
}

/// Moves generators into the Sylow subgroup lying over `m <(1 0; 1 1)> m^-1`.
pub fn sylow_copy(gens: &[HolElt], m: Gl2) -> Vec<HolElt> {
    let f = AutM1Elt::from_matrix(m);
    gens.iter().map(|g| conj_by_aut(&f, g)).collect()
}
