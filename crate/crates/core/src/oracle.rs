//! Brute-force enumeration of regular subgroups of `Hol(M1)`.
//!
//! Every `p`-subgroup of `Hol(M1)` lies in some `M1 x| A` with `A` a Sylow
//! `p`-subgroup of `Aut(M1)`. Each such ambient group has order `p^6` and is
//! searched layer by layer: order `p` subgroups first, then extensions by
//! normalising elements. Only subgroups meeting the stabiliser of `1`
//! trivially are kept, since those are exactly the subgroups of regular ones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::automorphism::{sylow_p_subgroups_aut, AutM1Elt};
use crate::error::Error;
use crate::families::ThetaSize;
use crate::fp::Prime;
use crate::heisenberg::M1Elt;
use crate::holomorph::HolElt;
use crate::subgroup::{GroupType, SubgroupHol};

/// Default largest prime the oracle accepts.
pub const ORACLE_BUDGET: u32 = 5;

/// A finite group on `0..order()` with `0` the identity.
pub trait IndexedGroup {
    fn order(&self) -> usize;
    fn mul(&self, x: u32, y: u32) -> u32;
    fn inv(&self, x: u32) -> u32;
}

/// Layers of subgroups of order `p, p^2, ..., p^depth` whose elements all
/// satisfy `admissible` (the identity is never tested).
///
/// Each subgroup is a sorted element list. A subgroup of order `p^(k+1)`
/// is found as `<H, x>` with `H` of order `p^k` normalised by `x` and
/// `x^p` in `H`; in a `p`-group every subgroup arises this way because
/// maximal subgroups are normal.
pub fn layered_subgroups<G: IndexedGroup>(
    g: &G,
    p: u32,
    depth: u32,
    admissible: impl Fn(u32) -> bool,
) -> Vec<Vec<Vec<u32>>> {
    let n = g.order();
    let pow = |x: u32, k: u32| -> u32 {
        let mut acc = 0;
        for _ in 0..k {
            acc = g.mul(acc, x);
        }
        acc
    };

    let mut layers: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut first = Vec::new();
    let mut covered = alloc::vec![false; n];
    for x in 1..n as u32 {
        if covered[x as usize] || !admissible(x) || pow(x, p) != 0 {
            continue;
        }
        let cyc: Vec<u32> = (0..p).map(|k| pow(x, k)).collect();
        if cyc[1..].iter().all(|&y| admissible(y)) {
            for &y in &cyc {
                covered[y as usize] = true;
            }
            let mut sorted = cyc;
            sorted.sort_unstable();
            first.push(sorted);
        }
    }
    layers.push(first);

    let mut member = alloc::vec![false; n];
    let mut covered = alloc::vec![false; n];
    for _ in 1..depth {
        let prev = layers.last().expect("at least one layer");
        let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
        for h in prev {
            let gens = small_generating_set(g, h);
            for &y in h {
                member[y as usize] = true;
                covered[y as usize] = true;
            }
            let mut touched: Vec<u32> = h.clone();
            for x in 1..n as u32 {
                if covered[x as usize] || !admissible(x) {
                    continue;
                }
                let xi = g.inv(x);
                let normalises = gens
                    .iter()
                    .all(|&s| member[g.mul(g.mul(x, s), xi) as usize]);
                if !normalises || !member[pow(x, p) as usize] {
                    continue;
                }
                // <H, x> = H x^0 u ... u H x^(p-1)
                let mut k = Vec::with_capacity(h.len() * p as usize);
                let mut xj = 0u32;
                for _ in 0..p {
                    k.extend(h.iter().map(|&y| g.mul(y, xj)));
                    xj = g.mul(xj, x);
                }
                for &y in &k {
                    if !covered[y as usize] {
                        covered[y as usize] = true;
                        touched.push(y);
                    }
                }
                if k.iter().all(|&y| y == 0 || admissible(y)) {
                    k.sort_unstable();
                    found.insert(k);
                }
            }
            for &y in h {
                member[y as usize] = false;
            }
            for y in touched {
                covered[y as usize] = false;
            }
        }
        layers.push(found.into_iter().collect());
    }
    layers
}

/// A generating set of the subgroup with sorted elements `h`.
fn small_generating_set<G: IndexedGroup>(g: &G, h: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut span: BTreeSet<u32> = BTreeSet::from([0]);
    for &x in h {
        if span.contains(&x) {
            continue;
        }
        gens.push(x);
        let mut frontier: Vec<u32> = span.iter().copied().collect();
        while let Some(y) = frontier.pop() {
            for &s in &gens {
                let z = g.mul(y, s);
                if span.insert(z) {
                    frontier.push(z);
                }
            }
        }
    }
    gens
}

/// `M1` itself, indexed by [`M1Elt::index`].
pub struct M1Table {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl M1Table {
    pub fn new(p: Prime) -> Self {
        let elts: Vec<M1Elt> = crate::heisenberg::elements(p).collect();
        let order = elts.len();
        let mut mul = alloc::vec![0u16; order * order];
        for x in &elts {
            for y in &elts {
                mul[x.index() * order + y.index()] = (*x * *y).index() as u16;
            }
        }
        let inv = elts.iter().map(|x| x.inv().index() as u16).collect();
        M1Table { order, mul, inv }
    }
}

impl IndexedGroup for M1Table {
    fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn mul(&self, x: u32, y: u32) -> u32 {
        u32::from(self.mul[x as usize * self.order + y as usize])
    }

    fn inv(&self, x: u32) -> u32 {
        u32::from(self.inv[x as usize])
    }
}

/// `M1 x| A` for a Sylow `p`-subgroup `A` of `Aut(M1)`.
///
/// Element `i * |A| + j` is `(n_i, a_j)`, where `n_i` has index `i` and
/// `a_j` is the `j`-th automorphism of `A`, with `a_0` the identity.
pub struct SylowAmbient {
    p: Prime,
    q3: usize,
    auts: Vec<AutM1Elt>,
    m1: M1Table,
    act: Vec<u16>,
    aut_mul: Vec<u16>,
    aut_inv: Vec<u16>,
}

impl SylowAmbient {
    /// The identity is moved to position `0`; the rest keep their order.
    pub fn new(p: Prime, mut auts: Vec<AutM1Elt>) -> Self {
        let m1 = M1Table::new(p);
        let q3 = m1.order;
        assert_eq!(auts.len(), q3, "Sylow subgroup of Aut(M1) has order p^3");
        let id = AutM1Elt::identity(p);
        let at = auts
            .iter()
            .position(|f| *f == id)
            .expect("subgroup contains the identity");
        auts[..=at].rotate_right(1);
        let mut slot = alloc::vec![u16::MAX; p.as_u64().pow(6) as usize];
        for (j, f) in auts.iter().enumerate() {
            slot[f.code() as usize] = j as u16;
        }
        let pos = |f: &AutM1Elt| {
            let j = slot[f.code() as usize];
            assert!(j != u16::MAX, "closed under composition");
            usize::from(j)
        };
        let elts: Vec<M1Elt> = crate::heisenberg::elements(p).collect();
        let mut act = alloc::vec![0u16; q3 * q3];
        let mut aut_mul = alloc::vec![0u16; q3 * q3];
        let mut aut_inv = alloc::vec![0u16; q3];
        for (j, f) in auts.iter().enumerate() {
            for x in &elts {
                act[j * q3 + x.index()] = f.apply(x).index() as u16;
            }
            for (k, g) in auts.iter().enumerate() {
                aut_mul[j * q3 + k] = pos(&f.compose(g)) as u16;
            }
            aut_inv[j] = pos(&f.inverse()) as u16;
        }
        SylowAmbient {
            p,
            q3,
            auts,
            m1,
            act,
            aut_mul,
            aut_inv,
        }
    }

    pub fn element(&self, x: u32) -> HolElt {
        let (i, j) = (x as usize / self.q3, x as usize % self.q3);
        HolElt::new(M1Elt::from_index(self.p, i), self.auts[j])
    }

    /// Nonidentity elements with trivial translation part fix `1`.
    #[inline]
    pub fn moves_one(&self, x: u32) -> bool {
        x as usize / self.q3 != 0
    }
}

impl IndexedGroup for SylowAmbient {
    fn order(&self) -> usize {
        self.q3 * self.q3
    }

    #[inline]
    fn mul(&self, x: u32, y: u32) -> u32 {
        let q = self.q3 as u32;
        let (n, a) = (x / q, x % q);
        let (m, b) = (y / q, y % q);
        let moved = u32::from(self.act[(a * q + m) as usize]);
        let nn = self.m1.mul(n, moved);
        let ab = u32::from(self.aut_mul[(a * q + b) as usize]);
        nn * q + ab
    }

    fn inv(&self, x: u32) -> u32 {
        let q = self.q3 as u32;
        let (n, a) = (x / q, x % q);
        let ai = u32::from(self.aut_inv[a as usize]);
        let ni = self.m1.inv(n);
        u32::from(self.act[(ai * q + ni) as usize]) * q + ai
    }
}

/// Every regular subgroup of `Hol(M1)`, sorted by canonical key.
pub fn enumerate_regular_subgroups(p: Prime) -> Result<Vec<SubgroupHol>, Error> {
    enumerate_regular_subgroups_with_budget(p, ORACLE_BUDGET)
}

pub fn enumerate_regular_subgroups_with_budget(
    p: Prime,
    budget: u32,
) -> Result<Vec<SubgroupHol>, Error> {
    if p.get() > budget {
        return Err(Error::BudgetExceeded {
            what: "regular subgroup oracle",
            p: p.get(),
            limit: budget,
        });
    }
    let per_sylow: Vec<Vec<SubgroupHol>> = sylow_p_subgroups_aut(p)
        .into_iter()
        .map(|auts| regular_subgroups_in_sylow(p, auts))
        .collect();
    Ok(merge_regular_subgroups(per_sylow))
}

/// Regular subgroups of `M1 x| A` for one Sylow subgroup `A`.
pub fn regular_subgroups_in_sylow(p: Prime, auts: Vec<AutM1Elt>) -> Vec<SubgroupHol> {
    let ambient = SylowAmbient::new(p, auts);
    let layers = layered_subgroups(&ambient, p.get(), 3, |x| ambient.moves_one(x));
    layers
        .last()
        .expect("three layers")
        .iter()
        .map(|sub| {
            let elements = sub.iter().map(|&x| ambient.element(x)).collect();
            SubgroupHol::from_elements(p, Vec::new(), elements)
        })
        .filter(SubgroupHol::is_regular)
        .collect()
}

/// Union of per-Sylow results, sorted by canonical key.
pub fn merge_regular_subgroups(
    parts: impl IntoIterator<Item = Vec<SubgroupHol>>,
) -> Vec<SubgroupHol> {
    let mut found: BTreeMap<Vec<u64>, SubgroupHol> = BTreeMap::new();
    for s in parts.into_iter().flatten() {
        found.entry(s.key().0).or_insert(s);
    }
    found.into_values().collect()
}

/// Regular subgroups grouped by isomorphism type and `|Theta|`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleCounts {
    pub by_type: BTreeMap<GroupType, u64>,
    pub by_theta: BTreeMap<(GroupType, ThetaSize), u64>,
}

impl OracleCounts {
    pub fn count(&self, t: GroupType) -> u64 {
        self.by_type.get(&t).copied().unwrap_or(0)
    }

    pub fn count_theta(&self, t: GroupType, theta: ThetaSize) -> u64 {
        self.by_theta.get(&(t, theta)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.by_type.values().sum()
    }
}

/// Tallies subgroups by `|Theta(S)|` alone.
pub fn bucket_by_theta(subs: &[SubgroupHol]) -> BTreeMap<ThetaSize, u64> {
    let mut out = BTreeMap::new();
    for s in subs {
        let theta =
            ThetaSize::from_order(s.prime(), s.theta_image().len()).expect("order p^k image");
        *out.entry(theta).or_insert(0) += 1;
    }
    out
}

/// Tallies regular subgroups by isomorphism type and `|Theta|`.
pub fn tally(subs: &[SubgroupHol]) -> Result<OracleCounts, Error> {
    let mut counts = OracleCounts::default();
    for s in subs {
        let t = s.isomorphism_type()?;
        let theta =
            ThetaSize::from_order(s.prime(), s.theta_image().len()).expect("order p^k image");
        *counts.by_type.entry(t).or_insert(0) += 1;
        *counts.by_theta.entry((t, theta)).or_insert(0) += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layered_construction_on_m1() {
        let p = Prime::new(5).unwrap();
        let m1 = M1Table::new(p);
        let layers = layered_subgroups(&m1, 5, 3, |_| true);
        let inv = crate::heisenberg::subgroup_inventory(p);
        assert_eq!(layers[0].len(), inv.order_p.len());
        assert_eq!(layers[1].len(), inv.order_p2.len());
        assert_eq!(layers[2].len(), 1);
        let mut expected: Vec<Vec<u32>> = inv
            .order_p2
            .iter()
            .map(|s| {
                let mut v: Vec<u32> = s.iter().map(|x| x.index() as u32).collect();
                v.sort_unstable();
                v
            })
            .collect();
        expected.sort();
        assert_eq!(layers[1], expected);
    }

    #[test]
    fn ambient_tables_agree_with_holomorph() {
        let p = Prime::new(5).unwrap();
        let auts = sylow_p_subgroups_aut(p).swap_remove(3);
        assert_ne!(auts[0], AutM1Elt::identity(p));
        let amb = SylowAmbient::new(p, auts);
        for x in (0..amb.order() as u32).step_by(97) {
            let gx = amb.element(x);
            assert_eq!(amb.element(amb.inv(x)), gx.inv());
            for y in (0..amb.order() as u32).step_by(331) {
                assert_eq!(amb.element(amb.mul(x, y)), gx * amb.element(y));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p = Prime::new(7).unwrap();
        assert!(matches!(
            enumerate_regular_subgroups(p),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
