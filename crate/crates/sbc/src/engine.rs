//! Parallel drivers around the sequential core routines.

use std::collections::BTreeSet;

use sbc_core::automorphism::sylow_p_subgroups_aut;
use sbc_core::classification::{
    build_records, orbit_of, prepare, survey_conjugacy, AutTable, Classification, ConjugacySurvey,
};
use sbc_core::families::Representative;
use sbc_core::oracle::{merge_regular_subgroups, regular_subgroups_in_sylow};
use sbc_core::{CanonicalKey, Error, Prime, SubgroupHol};

use crate::par;

/// Same result as the sequential classifier for any `jobs`.
pub fn classify(
    p: Prime,
    reps: &[Representative],
    expand_orbits: bool,
    jobs: usize,
) -> Result<Classification, Error> {
    let prepared = par::map(reps, jobs, prepare)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let subs: Vec<SubgroupHol> = prepared.iter().map(|r| r.subgroup.clone()).collect();
    let auts = AutTable::new(p)?;
    let mut survey = ConjugacySurvey::default();
    for part in par::map_chunks(auts.pairs(), jobs, |chunk| survey_conjugacy(&subs, chunk)) {
        survey.merge(part);
    }
    if survey.stabilizers.is_empty() {
        survey.stabilizers = vec![Vec::new(); subs.len()];
    }
    let orbits: Option<Vec<BTreeSet<CanonicalKey>>> =
        expand_orbits.then(|| par::map(&subs, jobs, orbit_of));
    let records = build_records(p, &prepared, &survey, orbits.as_deref());
    Ok(Classification {
        p,
        records,
        survey,
        orbits,
    })
}

/// Every regular subgroup, one Sylow subgroup of `Aut(M1)` per task.
pub fn regular_subgroups(p: Prime, budget: u32, jobs: usize) -> Result<Vec<SubgroupHol>, Error> {
    if p.get() > budget {
        return Err(Error::BudgetExceeded {
            what: "regular subgroup oracle",
            p: p.get(),
            limit: budget,
        });
    }
    let sylows = sylow_p_subgroups_aut(p);
    let parts = par::map(&sylows, jobs, |auts| {
        regular_subgroups_in_sylow(p, auts.clone())
    });
    Ok(merge_regular_subgroups(parts))
}
