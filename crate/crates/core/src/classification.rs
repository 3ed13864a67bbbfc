//! Conjugacy classes of regular subgroups under `Aut(M1)`, brace
//! automorphism groups and Hopf-Galois counts.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::automorphism::{aut_generators, aut_order, enumerate_aut, gl3_order, AutM1Elt};
use crate::brace::SkewBrace;
use crate::error::Error;
use crate::families::{Representative, ThetaSize};
use crate::fp::Prime;
use crate::holomorph::HolElt;
use crate::oracle::OracleCounts;
use crate::subgroup::{CanonicalKey, GroupType, SubgroupHol};

/// Counts keyed by multiplicative structure and `|Theta|`.
pub type Tally = BTreeMap<(GroupType, ThetaSize), u128>;

/// `Aut(M1)` in code order, each element paired with its inverse.
#[derive(Clone, Debug)]
pub struct AutTable {
    pairs: Vec<(AutM1Elt, AutM1Elt)>,
}

impl AutTable {
    pub fn new(p: Prime) -> Result<Self, Error> {
        let pairs = enumerate_aut(p)?
            .into_iter()
            .map(|f| (f, f.inverse()))
            .collect();
        Ok(AutTable { pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &AutM1Elt> {
        self.pairs.iter().map(|(f, _)| f)
    }

    pub fn pairs(&self) -> &[(AutM1Elt, AutM1Elt)] {
        &self.pairs
    }
}

/// `f g f^-1` for `f` with known inverse.
#[inline]
fn conj_with(f: &AutM1Elt, f_inv: &AutM1Elt, g: &HolElt) -> HolElt {
    HolElt::new(f.apply(&g.n), f.compose(&g.alpha).compose(f_inv))
}

fn stabilizes(f: &AutM1Elt, f_inv: &AutM1Elt, s: &SubgroupHol) -> bool {
    s.generators()
        .iter()
        .all(|g| s.contains(&conj_with(f, f_inv, g)))
}

/// `{f in Aut(M1) : f S f^-1 = S}`, in code order.
pub fn brace_aut_group(s: &SubgroupHol) -> Result<Vec<AutM1Elt>, Error> {
    Ok(brace_aut_group_in(s, &AutTable::new(s.prime())?))
}

pub fn brace_aut_group_in(s: &SubgroupHol, auts: &AutTable) -> Vec<AutM1Elt> {
    auts.pairs
        .iter()
        .filter(|(f, fi)| stabilizes(f, fi, s))
        .map(|(f, _)| *f)
        .collect()
}

/// Stabilisers of a list of subgroups together with every pair `(i, j)`,
/// `i != j`, found to be conjugate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjugacySurvey {
    pub stabilizers: Vec<Vec<AutM1Elt>>,
    pub collisions: BTreeSet<(usize, usize)>,
}

impl ConjugacySurvey {
    /// Appends the results of a later slice of automorphisms.
    pub fn merge(&mut self, other: ConjugacySurvey) {
        if self.stabilizers.is_empty() {
            self.stabilizers = other.stabilizers;
        } else {
            for (mine, theirs) in self.stabilizers.iter_mut().zip(other.stabilizers) {
                mine.extend(theirs);
            }
        }
        self.collisions.extend(other.collisions);
    }

    pub fn stabilizer_orders(&self) -> Vec<u64> {
        self.stabilizers.iter().map(|s| s.len() as u64).collect()
    }
}

/// Conjugates the generators of every subgroup by every automorphism in
/// `auts` and looks the images up in an index of all subgroups.
pub fn survey_conjugacy(subs: &[SubgroupHol], auts: &[(AutM1Elt, AutM1Elt)]) -> ConjugacySurvey {
    let mut index: Vec<(u64, u16)> = subs
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.elements().iter().map(move |g| (g.code(), i as u16)))
        .collect();
    index.sort_unstable();
    let holders = |g: &HolElt| -> &[(u64, u16)] {
        let code = g.code();
        let lo = index.partition_point(|e| e.0 < code);
        let hi = index.partition_point(|e| e.0 <= code);
        &index[lo..hi]
    };

    let mut survey = ConjugacySurvey {
        stabilizers: alloc::vec![Vec::new(); subs.len()],
        collisions: BTreeSet::new(),
    };
    let mut candidates: Vec<u16> = Vec::new();
    for (f, fi) in auts {
        for (i, s) in subs.iter().enumerate() {
            let mut gens = s.generators().iter();
            let first = gens.next().expect("nonempty generating set");
            candidates.clear();
            candidates.extend(holders(&conj_with(f, fi, first)).iter().map(|e| e.1));
            for g in gens {
                if candidates.is_empty() {
                    break;
                }
                let image = conj_with(f, fi, g);
                let h = holders(&image);
                candidates.retain(|c| h.iter().any(|e| e.1 == *c));
            }
            for &j in &candidates {
                let j = usize::from(j);
                if subs[j].order() != s.order() {
                    continue;
                }
                if j == i {
                    survey.stabilizers[i].push(*f);
                } else {
                    survey.collisions.insert((i.min(j), i.max(j)));
                }
            }
        }
    }
    survey
}

/// The `Aut(M1)`-conjugacy orbit of `s`.
pub fn orbit_of(s: &SubgroupHol) -> BTreeSet<CanonicalKey> {
    let gens: Vec<(AutM1Elt, AutM1Elt)> = aut_generators(s.prime())
        .into_iter()
        .map(|f| (f, f.inverse()))
        .collect();
    let mut seen = BTreeSet::from([s.key()]);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(t) = queue.pop_front() {
        for (f, fi) in &gens {
            let elements = t.elements().iter().map(|g| conj_with(f, fi, g)).collect();
            let gens = t.generators().iter().map(|g| conj_with(f, fi, g)).collect();
            let c = SubgroupHol::from_elements(s.prime(), gens, elements);
            if seen.insert(c.key()) {
                queue.push_back(c);
            }
        }
    }
    seen
}

/// One brace up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub id: String,
    pub theta: ThetaSize,
    pub structure: GroupType,
    pub autbr_order: u64,
    pub orbit_size: u64,
    pub socle_order: u64,
    pub annihilator_order: u64,
    pub predicted_autbr_order: u128,
    /// Smallest canonical key in the orbit, when orbits were expanded.
    pub canonical_key: Option<CanonicalKey>,
}

/// What a representative contributes before any `Aut(M1)` scan.
#[derive(Clone, Debug)]
pub struct PreparedRepresentative {
    pub rep: Representative,
    pub subgroup: SubgroupHol,
    pub structure: GroupType,
    pub socle_order: u64,
    pub annihilator_order: u64,
}

pub fn prepare(rep: &Representative) -> Result<PreparedRepresentative, Error> {
    let subgroup = rep.subgroup()?;
    let structure = subgroup.isomorphism_type()?;
    let brace = SkewBrace::from_subgroup(&subgroup)?;
    let socle = brace.socle();
    let ann = brace.annihilator();
    Ok(PreparedRepresentative {
        rep: rep.clone(),
        subgroup,
        structure,
        socle_order: socle.len() as u64,
        annihilator_order: ann.len() as u64,
    })
}

/// Joins prepared representatives with their stabilisers and optional
/// orbits into records.
pub fn build_records(
    p: Prime,
    prepared: &[PreparedRepresentative],
    survey: &ConjugacySurvey,
    orbits: Option<&[BTreeSet<CanonicalKey>]>,
) -> Vec<ClassificationRecord> {
    let aut = aut_order(p) as u64;
    prepared
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let autbr = survey.stabilizers[i].len() as u64;
            ClassificationRecord {
                id: r.rep.id.clone(),
                theta: r.rep.theta,
                structure: r.structure,
                autbr_order: autbr,
                orbit_size: aut.checked_div(autbr).unwrap_or(0),
                socle_order: r.socle_order,
                annihilator_order: r.annihilator_order,
                predicted_autbr_order: r.rep.predicted_autbr_order,
                canonical_key: orbits.and_then(|o| o[i].first().cloned()),
            }
        })
        .collect()
}

/// Everything the classifier produces for one prime.
#[derive(Clone, Debug)]
pub struct Classification {
    pub p: Prime,
    pub records: Vec<ClassificationRecord>,
    pub survey: ConjugacySurvey,
    pub orbits: Option<Vec<BTreeSet<CanonicalKey>>>,
}

impl Classification {
    /// Orbit sizes times stabiliser orders equal `|Aut(M1)|`, and no two
    /// representatives are conjugate.
    pub fn consistent(&self) -> bool {
        let aut = aut_order(self.p) as u64;
        let orbit_ok = self
            .records
            .iter()
            .all(|r| r.autbr_order * r.orbit_size == aut);
        let expanded_ok = self.orbits.as_ref().is_none_or(|o| {
            o.iter()
                .zip(&self.records)
                .all(|(orb, r)| orb.len() as u64 == r.orbit_size)
        });
        orbit_ok && expanded_ok && self.survey.collisions.is_empty()
    }

    /// Every stabiliser has the order its family predicts.
    pub fn stabilizers_as_predicted(&self) -> bool {
        self.records
            .iter()
            .all(|r| u128::from(r.autbr_order) == r.predicted_autbr_order)
    }
}

/// Sequential classification over all of `reps`.
pub fn classify(
    p: Prime,
    reps: &[Representative],
    expand_orbits: bool,
) -> Result<Classification, Error> {
    let prepared = reps.iter().map(prepare).collect::<Result<Vec<_>, _>>()?;
    let subs: Vec<SubgroupHol> = prepared.iter().map(|r| r.subgroup.clone()).collect();
    let auts = AutTable::new(p)?;
    let survey = survey_conjugacy(&subs, auts.pairs());
    let orbits = expand_orbits.then(|| subs.iter().map(orbit_of).collect::<Vec<_>>());
    let records = build_records(p, &prepared, &survey, orbits.as_deref());
    Ok(Classification {
        p,
        records,
        survey,
        orbits,
    })
}

/// `|Aut(G)|` for the two structures that occur.
pub fn structure_aut_order(p: Prime, g: GroupType) -> Option<u128> {
    match g {
        GroupType::HeisenbergM1 => Some(aut_order(p)),
        GroupType::ElemAbelianP3 => Some(gl3_order(p)),
        _ => None,
    }
}

/// Brace counts per structure and `|Theta|`.
pub fn brace_counts(records: &[ClassificationRecord]) -> Tally {
    let mut t = Tally::new();
    for r in records {
        *t.entry((r.structure, r.theta)).or_insert(0) += 1;
    }
    t
}

/// `e(G, M1) = sum |Aut(G)| / |Aut_Br|` per structure and `|Theta|`.
pub fn hgs_counts(p: Prime, records: &[ClassificationRecord]) -> Tally {
    let mut t = Tally::new();
    for r in records {
        let aut_g = structure_aut_order(p, r.structure).expect("structure of an M1-type brace");
        assert!(
            r.autbr_order != 0 && aut_g.is_multiple_of(u128::from(r.autbr_order)),
            "brace automorphism group order divides |Aut(G)|"
        );
        *t.entry((r.structure, r.theta)).or_insert(0) += aut_g / u128::from(r.autbr_order);
    }
    t
}

/// Printed brace and Hopf-Galois counts evaluated at `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub braces: Tally,
    pub hgs: Tally,
}

impl ClosedForms {
    pub fn total_braces(&self, g: GroupType) -> u128 {
        total(&self.braces, g)
    }

    pub fn total_hgs(&self, g: GroupType) -> u128 {
        total(&self.hgs, g)
    }
}

pub fn total(t: &Tally, g: GroupType) -> u128 {
    t.iter()
        .filter(|((s, _), _)| *s == g)
        .map(|(_, n)| *n)
        .sum()
}

pub fn closed_form_counts(p: Prime) -> ClosedForms {
    use GroupType::{ElemAbelianP3 as Ab, HeisenbergM1 as M1};
    use ThetaSize::{One, P, P2, P3};
    let q = i128::from(p.get());
    let entries = |v: [(GroupType, ThetaSize, i128); 6]| -> Tally {
        v.into_iter().map(|(g, t, n)| ((g, t), n as u128)).collect()
    };
    let braces = entries([
        (M1, One, 1),
        (M1, P, 2 * (q - 1)),
        (M1, P2, (2 * q - 3) * q),
        (M1, P3, 4),
        (Ab, P, 2),
        (Ab, P2, 2 * q - 1),
    ]);
    let hgs = entries([
        (M1, One, 1),
        (M1, P, (q * q * q - q * q - 1) * (q + 1)),
        (M1, P2, (q.pow(4) - q.pow(3) - 2 * q * q + 2 * q + 1) * q),
        (M1, P3, (q * q - 1) * q.pow(3)),
        (Ab, P, (q.pow(3) - 1) * (q + 1) * q * q),
        (Ab, P2, (q.pow(3) - 1) * (q * q - 2) * q * q),
    ]);
    ClosedForms { braces, hgs }
}

/// Closed-form totals `2p^2 - p + 3`, `2p + 1`,
/// `(2p^3 - 3p + 1) p^2` and `(p^3 - 1)(p^2 + p - 1) p^2`.
pub fn closed_form_totals(p: Prime) -> [u128; 4] {
    let q = u128::from(p.get());
    [
        2 * q * q - q + 3,
        2 * q + 1,
        (2 * q.pow(3) - 3 * q + 1) * q * q,
        (q.pow(3) - 1) * (q * q + q - 1) * q * q,
    ]
}

/// `e(G, M1) = |Aut(G)| / |Aut(M1)| * e'(G, M1)` from raw regular subgroup
/// counts.
pub fn crosscheck_e_prime(p: Prime, oracle: &OracleCounts) -> Tally {
    let aut_n = aut_order(p);
    oracle
        .by_theta
        .iter()
        .map(|(&(g, t), &n)| {
            let aut_g = structure_aut_order(p, g).unwrap_or(aut_n);
            ((g, t), aut_g * u128::from(n) / aut_n)
        })
        .collect()
}

/// Brace and Hopf-Galois counts from every available source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub p: Prime,
    pub braces: Tally,
    pub hgs: Tally,
    pub closed_form: ClosedForms,
    /// Raw regular subgroup counts and the Hopf-Galois counts they imply.
    pub oracle: Option<(Tally, Tally)>,
}

impl CountReport {
    pub fn new(p: Prime, records: &[ClassificationRecord], oracle: Option<&OracleCounts>) -> Self {
        CountReport {
            p,
            braces: brace_counts(records),
            hgs: hgs_counts(p, records),
            closed_form: closed_form_counts(p),
            oracle: oracle.map(|o| {
                let raw = o
                    .by_theta
                    .iter()
                    .map(|(k, &n)| (*k, u128::from(n)))
                    .collect();
                (raw, crosscheck_e_prime(p, o))
            }),
        }
    }

    pub fn all_match(&self) -> bool {
        let closed = self.braces == self.closed_form.braces && self.hgs == self.closed_form.hgs;
        let [m1, ab, e_m1, e_ab] = closed_form_totals(self.p);
        let totals = self.closed_form.total_braces(GroupType::HeisenbergM1) == m1
            && self.closed_form.total_braces(GroupType::ElemAbelianP3) == ab
            && self.closed_form.total_hgs(GroupType::HeisenbergM1) == e_m1
            && self.closed_form.total_hgs(GroupType::ElemAbelianP3) == e_ab;
        let oracle = self.oracle.as_ref().is_none_or(|(_, e)| *e == self.hgs);
        closed && totals && oracle
    }
}
