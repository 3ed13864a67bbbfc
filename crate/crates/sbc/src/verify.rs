//! The invariant suite behind `sbc verify`.

use std::collections::BTreeSet;

use serde::Serialize;

use sbc_core::automorphism::{enumerate_aut, AutM1Elt};
use sbc_core::brace::{Label, SkewBrace};
use sbc_core::classification::{
    closed_form_counts, closed_form_totals, total, Classification, ClosedForms, CountReport,
};
use sbc_core::families::{
    all_representatives, families_theta_p, families_theta_p2, families_theta_p3, FamilyMember,
    ThetaSize,
};
use sbc_core::heisenberg::elements;
use sbc_core::holomorph::{
    aut_action_closed, conj_by_aut, conj_closed, hol_pow_closed, sylow_action_closed,
};
use sbc_core::oracle::tally;
use sbc_core::{Error, GroupType, HolElt, M1Elt, Prime, SubgroupHol};

use crate::cli::Fault;
use crate::{engine, par};

/// Pairs drawn for the bracket composition check.
pub const COMPOSITION_SAMPLE: u64 = 1_000_000;
const COMPOSITION_STRIDE: u64 = 1_000_003;
/// Holomorph pairs drawn for the action law check.
const HOL_SAMPLE: u64 = 20_000;

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub oracle_budget: Option<u32>,
    pub fault: Option<Fault>,
}

/// Runs every check at `p`. Exhaustive where the sizes allow it; above
/// `p = 5` the brace axiom and braid relation are checked with the first
/// argument restricted to every `p`-th label.
pub fn run(p: Prime, jobs: usize, opts: VerifyOptions) -> Result<Vec<Check>, Error> {
    let auts = enumerate_aut(p)?;
    let mut checks = vec![
        m1_group(p),
        m1_power(p),
        aut_homomorphism(p, &auts, jobs),
        aut_composition(&auts, opts.fault),
        semidirect_law(p, &auts),
        sylow_relations(p),
        action_closed_form(p, &auts, jobs),
        power_closed_form(p),
        conjugation_closed_form(p, &auts, jobs),
        family_regularity(p, jobs),
    ];

    let reps = all_representatives(p);
    let expand = p.get() <= 5;
    let c = engine::classify(p, &reps, expand, jobs)?;
    checks.extend(classification_checks(p, &c, &reps));

    let subs = par::map(&reps, jobs, |r| r.subgroup())
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    checks.extend(brace_checks(p, &c, &subs, jobs)?);

    if let Some(budget) = opts.oracle_budget {
        checks.push(oracle_check(p, &c, budget, jobs)?);
    }
    Ok(checks)
}

fn m1_group(p: Prime) -> Check {
    let all: Vec<M1Elt> = elements(p).collect();
    let e = M1Elt::identity(p);
    let units = all
        .iter()
        .all(|x| *x * e == *x && e * *x == *x && *x * x.inv() == e);
    let assoc = all.iter().all(|x| {
        all.iter().all(|y| {
            let xy = *x * *y;
            all.iter().all(|z| xy * *z == *x * (*y * *z))
        })
    });
    Check::new(
        "m1-group",
        units && assoc,
        format!("{} elements, all triples", all.len()),
    )
}

fn m1_power(p: Prime) -> Check {
    let q = i64::from(p.get());
    let pass = elements(p).all(|x| {
        let mut acc = M1Elt::identity(p);
        (0..=q + 1).all(|n| {
            let ok = x.pow(n) == acc;
            acc = acc * x;
            ok
        }) && x.pow(-1) == x.inv()
    });
    Check::new("m1-power", pass, format!("exponents 0..={}", q + 1))
}

fn aut_homomorphism(p: Prime, auts: &[AutM1Elt], jobs: usize) -> Check {
    let all: Vec<M1Elt> = elements(p).collect();
    let gens = [M1Elt::sigma(p), M1Elt::tau(p), M1Elt::rho(p)];
    let pass = par::map_chunks(auts, jobs, |chunk| {
        chunk.iter().all(|f| {
            let fi = f.inverse();
            all.iter().all(|x| {
                gens.iter()
                    .all(|y| f.apply(&(*x * *y)) == f.apply(x) * f.apply(y))
                    && fi.apply(&f.apply(x)) == *x
            })
        })
    })
    .into_iter()
    .all(|b| b);
    Check::new(
        "aut-homomorphism",
        pass,
        format!("{} automorphisms", auts.len()),
    )
}

/// Bracket composition against composition of the maps, on a fixed
/// sample of pairs.
fn aut_composition(auts: &[AutM1Elt], fault: Option<Fault>) -> Check {
    let n = auts.len() as u64;
    let space = n * n;
    let samples = COMPOSITION_SAMPLE.min(space);
    let p = auts[0].prime();
    let (s, t) = (M1Elt::sigma(p), M1Elt::tau(p));
    let mut bad = None;
    for k in 0..samples {
        let idx = (k * COMPOSITION_STRIDE) % space;
        let (f, g) = (&auts[(idx / n) as usize], &auts[(idx % n) as usize]);
        let mut h = f.compose_bracket(g);
        if fault == Some(Fault::Composition) {
            h = AutM1Elt::new(i64::from(h.b1) + 1, h.b2.into(), h.m);
        }
        let pointwise =
            h.apply(&s) == f.apply(&g.apply(&s)) && h.apply(&t) == f.apply(&g.apply(&t));
        if !pointwise || h != f.compose(g) {
            bad = Some((*f, *g));
            break;
        }
    }
    match bad {
        None => Check::new("aut-composition", true, format!("{samples} pairs")),
        Some((f, g)) => Check::new(
            "aut-composition",
            false,
            format!("differs at f = {f}, g = {g}"),
        ),
    }
}

fn hol_sample(p: Prime, auts: &[AutM1Elt], k: u64) -> HolElt {
    let q3 = u64::from(p.get()).pow(3);
    let n = M1Elt::from_index(p, ((k * 7919) % q3) as usize);
    HolElt::new(n, auts[((k * 104_729) % auts.len() as u64) as usize])
}

fn semidirect_law(p: Prime, auts: &[AutM1Elt]) -> Check {
    let all: Vec<M1Elt> = elements(p).collect();
    let pass = (0..HOL_SAMPLE).all(|k| {
        let g = hol_sample(p, auts, k);
        let h = hol_sample(p, auts, k + HOL_SAMPLE);
        let gh = g * h;
        gh.theta() == g.theta().compose(&h.theta())
            && (g * g.inv()).is_identity()
            && all.iter().all(|x| gh.act(x) == g.act(&h.act(x)))
    });
    Check::new(
        "semidirect-law",
        pass,
        format!("{HOL_SAMPLE} pairs, every point"),
    )
}

/// `alpha1^a1 alpha2^a2 alpha3^a3` multiply like `r^a1 s^a2 t^a3`.
fn sylow_relations(p: Prime) -> Check {
    let coords: Vec<M1Elt> = elements(p).collect();
    let sy = |x: &M1Elt| AutM1Elt::from_sylow_coords(p, x.a.into(), x.b.into(), x.c.into());
    let pass = coords.iter().all(|x| {
        let fx = sy(x);
        fx.sylow_coords() == Some([x.a, x.b, x.c])
            && coords.iter().all(|y| fx.compose(&sy(y)) == sy(&(*x * *y)))
    });
    Check::new(
        "sylow-relations",
        pass,
        format!("{} pairs", coords.len().pow(2)),
    )
}

fn action_closed_form(p: Prime, auts: &[AutM1Elt], jobs: usize) -> Check {
    let all: Vec<M1Elt> = elements(p).collect();
    let sylow = all.iter().all(|c| {
        let f = AutM1Elt::from_sylow_coords(p, c.a.into(), c.b.into(), c.c.into());
        all.iter()
            .all(|v| sylow_action_closed([c.a, c.b, c.c], v) == f.apply(v))
    });
    let general = par::map_chunks(auts, jobs, |chunk| {
        chunk.iter().all(|f| {
            let (r1, r3, m) = f.split();
            all.iter()
                .all(|v| aut_action_closed(r1, r3, &m, v) == f.apply(v))
        })
    })
    .into_iter()
    .all(|b| b);
    Check::new(
        "action-closed-form",
        sylow && general,
        "every Sylow-form and every automorphism on every point",
    )
}

fn power_closed_form(p: Prime) -> Check {
    let all: Vec<M1Elt> = elements(p).collect();
    let pass = all.iter().all(|c| {
        let alpha = AutM1Elt::from_sylow_coords(p, c.a.into(), c.b.into(), c.c.into());
        all.iter().all(|v| {
            let g = HolElt::new(*v, alpha);
            let mut acc = HolElt::identity(p);
            (0..=p.get()).all(|r| {
                let ok = hol_pow_closed(&g, r) == Ok(acc);
                acc = acc * g;
                ok
            })
        })
    });
    Check::new(
        "power-closed-form",
        pass,
        format!("{} elements, r in 0..={}", all.len().pow(2), p.get()),
    )
}

/// Every automorphism against every translation part and every Sylow
/// exponent triple. The two components of the closed form depend on
/// disjoint inputs, so pairing them up covers each exhaustively.
fn conjugation_closed_form(p: Prime, auts: &[AutM1Elt], jobs: usize) -> Check {
    let all: Vec<M1Elt> = elements(p).collect();
    let last = all.len() - 1;
    let pass = par::map_chunks(auts, jobs, |chunk| {
        chunk.iter().all(|f| {
            let upper = f.split().2.a[1];
            (0..all.len()).all(|i| {
                [all[i], all[last - i]].iter().all(|c| {
                    let alpha = AutM1Elt::from_sylow_coords(p, c.a.into(), c.b.into(), c.c.into());
                    let g = HolElt::new(all[i], alpha);
                    let generic = conj_by_aut(f, &g);
                    match conj_closed(f, &g) {
                        Ok(h) => h == generic,
                        Err(_) => c.b != 0 && upper != 0 && generic.alpha.sylow_coords().is_none(),
                    }
                })
            })
        })
    })
    .into_iter()
    .all(|b| b);
    Check::new(
        "conjugation-closed-form",
        pass,
        format!("{} automorphisms", auts.len()),
    )
}

fn all_members(p: Prime) -> Vec<FamilyMember> {
    let mut v = families_theta_p(p).0;
    let (i, ii, _) = families_theta_p2(p);
    v.extend(i);
    v.extend(ii);
    v.extend(families_theta_p3(p).0);
    v
}

fn family_regularity(p: Prime, jobs: usize) -> Check {
    let members = all_members(p);
    let pass = par::map(&members, jobs, |m| {
        let Ok(s) = m.subgroup() else { return false };
        let theta = ThetaSize::from_order(p, s.theta_image().len());
        s.is_regular() && s.isomorphism_type() == Ok(m.expected) && theta == Some(m.params.theta)
    })
    .into_iter()
    .all(|b| b);
    Check::new(
        "family-regularity",
        pass,
        format!("{} members", members.len()),
    )
}

fn classification_checks(
    p: Prime,
    c: &Classification,
    reps: &[sbc_core::families::Representative],
) -> Vec<Check> {
    let types = c
        .records
        .iter()
        .zip(reps)
        .all(|(r, rep)| r.structure == rep.expected);
    let report = CountReport::new(p, &c.records, None);
    let closed: ClosedForms = closed_form_counts(p);
    let [m1, ab, e_m1, e_ab] = closed_form_totals(p);
    let brace_totals = total(&report.braces, GroupType::HeisenbergM1) == m1
        && total(&report.braces, GroupType::ElemAbelianP3) == ab;
    let hgs_totals = total(&report.hgs, GroupType::HeisenbergM1) == e_m1
        && total(&report.hgs, GroupType::ElemAbelianP3) == e_ab;
    vec![
        Check::new(
            "representative-types",
            types,
            format!("{} representatives", reps.len()),
        ),
        Check::new(
            "non-conjugacy",
            c.survey.collisions.is_empty(),
            format!("{} conjugate pairs", c.survey.collisions.len()),
        ),
        Check::new(
            "orbit-stabilizer",
            c.consistent(),
            if c.orbits.is_some() {
                "orbits expanded"
            } else {
                "from stabiliser orders"
            },
        ),
        Check::new(
            "stabilizer-orders",
            c.stabilizers_as_predicted(),
            "every family prediction",
        ),
        Check::new(
            "brace-counts",
            report.braces == closed.braces && brace_totals,
            format!("{m1} + {ab}"),
        ),
        Check::new(
            "hgs-counts",
            report.hgs == closed.hgs && hgs_totals,
            format!("{e_m1} + {e_ab}"),
        ),
    ]
}

fn sample_labels(p: Prime, n: usize) -> Vec<Label> {
    let step = if p.get() <= 5 { 1 } else { p.get() as usize };
    (0..n).step_by(step).map(|x| x as Label).collect()
}

#[derive(Default)]
struct BraceOutcome {
    axiom: bool,
    lambda: bool,
    ideals: bool,
    embedding: bool,
    braid: bool,
    nondegenerate: bool,
}

fn brace_checks(
    p: Prime,
    c: &Classification,
    subs: &[SubgroupHol],
    jobs: usize,
) -> Result<Vec<Check>, Error> {
    let braces = par::map(subs, jobs, SkewBrace::from_subgroup)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let outcomes: Vec<(BraceOutcome, ThetaSize)> = par::map(
        &braces.iter().zip(&c.records).collect::<Vec<_>>(),
        jobs,
        |(b, r)| {
            let xs = sample_labels(p, b.order());
            let socle = b.socle();
            let ann = b.annihilator();
            let expected = if r.theta == ThetaSize::P3 {
                1
            } else {
                p.get() as usize
            };
            let ybe = b.ybe();
            let out = BraceOutcome {
                axiom: b.verify_axiom_on(xs.iter().copied()).is_ok(),
                lambda: b.verify_lambda(),
                ideals: socle.len() == expected
                    && ann.len() == expected
                    && b.is_ideal(&socle)
                    && b.is_ideal(&ann),
                embedding: b.embedding_round_trip(),
                braid: ybe.verify_braid_on(xs.iter().copied()).is_ok(),
                nondegenerate: ybe.verify_nondegenerate(),
            };
            (out, r.theta)
        },
    );
    let scope = if p.get() <= 5 {
        "every triple"
    } else {
        "first argument every p-th label"
    };
    let all = |f: fn(&BraceOutcome) -> bool| outcomes.iter().all(|(o, _)| f(o));
    let n = braces.len();
    let failing: BTreeSet<ThetaSize> = outcomes
        .iter()
        .filter(|(o, _)| !o.ideals)
        .map(|(_, t)| *t)
        .collect();
    Ok(vec![
        Check::new(
            "brace-axiom",
            all(|o| o.axiom),
            format!("{n} braces, {scope}"),
        ),
        Check::new("lambda-map", all(|o| o.lambda), format!("{n} braces")),
        Check::new(
            "socle-annihilator",
            failing.is_empty(),
            if failing.is_empty() {
                "orders p below |Theta| = p^3, 1 at p^3; both ideals".to_string()
            } else {
                format!("wrong at |Theta| in {failing:?}")
            },
        ),
        Check::new(
            "embedding-round-trip",
            all(|o| o.embedding),
            format!("{n} braces"),
        ),
        Check::new(
            "braid-relation",
            all(|o| o.braid),
            format!("{n} solutions, {scope}"),
        ),
        Check::new(
            "non-degenerate",
            all(|o| o.nondegenerate),
            format!("{n} solutions"),
        ),
    ])
}

fn oracle_check(p: Prime, c: &Classification, budget: u32, jobs: usize) -> Result<Check, Error> {
    let subs = engine::regular_subgroups(p, budget, jobs)?;
    let counts = tally(&subs)?;
    let report = CountReport::new(p, &c.records, Some(&counts));
    let other: u64 = counts
        .by_type
        .iter()
        .filter(|(t, _)| !matches!(t, GroupType::HeisenbergM1 | GroupType::ElemAbelianP3))
        .map(|(_, n)| n)
        .sum();
    let union_ok = c.orbits.as_ref().is_none_or(|orbits| {
        let union: BTreeSet<_> = orbits.iter().flatten().cloned().collect();
        let found: BTreeSet<_> = subs.iter().map(SubgroupHol::key).collect();
        union == found && orbits.iter().map(BTreeSet::len).sum::<usize>() == union.len()
    });
    let pass = report.all_match() && other == 0 && union_ok;
    Ok(Check::new(
        "oracle",
        pass,
        format!(
            "{} M1, {} Cp3, {other} other",
            counts.count(GroupType::HeisenbergM1),
            counts.count(GroupType::ElemAbelianP3)
        ),
    ))
}
