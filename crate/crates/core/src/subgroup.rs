//! Finite subgroups of `Hol(M1)` stored as sorted element sets.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::automorphism::AutM1Elt;
use crate::error::Error;
use crate::fp::Prime;
use crate::heisenberg::M1Elt;
use crate::holomorph::{conj_by_aut, HolElt};

/// Isomorphism types of groups of order `p^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    ElemAbelianP3,
    CyclicP3,
    Cp2xCp,
    HeisenbergM1,
    ExtraspecialM2,
}

impl GroupType {
    pub const ALL: [GroupType; 5] = [
        GroupType::HeisenbergM1,
        GroupType::ElemAbelianP3,
        GroupType::CyclicP3,
        GroupType::Cp2xCp,
        GroupType::ExtraspecialM2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            GroupType::ElemAbelianP3 => "Cp3",
            GroupType::CyclicP3 => "Cp^3",
            GroupType::Cp2xCp => "Cp2xCp",
            GroupType::HeisenbergM1 => "M1",
            GroupType::ExtraspecialM2 => "M2",
        }
    }

    pub fn from_label(s: &str) -> Option<GroupType> {
        GroupType::ALL.into_iter().find(|t| t.label() == s)
    }

    /// Classifies a group of order `p^3` from its commutativity, exponent
    /// and minimal number of generators.
    pub fn classify(abelian: bool, exponent: u64, p: u64, rank: usize) -> Option<GroupType> {
        match (abelian, exponent, rank) {
            (true, e, 3) if e == p => Some(GroupType::ElemAbelianP3),
            (true, e, 2) if e == p * p => Some(GroupType::Cp2xCp),
            (true, e, 1) if e == p * p * p => Some(GroupType::CyclicP3),
            (false, e, 2) if e == p => Some(GroupType::HeisenbergM1),
            (false, e, 2) if e == p * p => Some(GroupType::ExtraspecialM2),
            _ => None,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Sorted list of element codes; two subgroups are equal iff their keys are.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<u64>);

impl CanonicalKey {
    /// 64-bit FNV-1a digest of the code list, for display.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for code in &self.0 {
            for byte in code.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
        h
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.fingerprint())
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupHol {
    p: Prime,
    generators: Vec<HolElt>,
    elements: Vec<HolElt>,
}

impl PartialEq for SubgroupHol {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for SubgroupHol {}

fn greedy_generators(p: Prime, elements: &[HolElt]) -> Vec<HolElt> {
    let mut gens = Vec::new();
    let mut span = BTreeSet::from([HolElt::identity(p)]);
    for x in elements {
        if span.contains(x) {
            continue;
        }
        gens.push(*x);
        let mut frontier: Vec<HolElt> = span.iter().copied().collect();
        while let Some(y) = frontier.pop() {
            for g in &gens {
                let z = y * *g;
                if span.insert(z) {
                    frontier.push(z);
                }
            }
        }
    }
    gens
}

/// Default closure cap, `p^6`.
pub fn default_cap(p: Prime) -> usize {
    p.as_u64().pow(6) as usize
}

impl SubgroupHol {
    /// Closure of `gens` under multiplication, capped at `p^6` elements.
    pub fn generate(p: Prime, gens: &[HolElt]) -> Result<Self, Error> {
        Self::generate_with_cap(p, gens, default_cap(p))
    }

    pub fn generate_with_cap(p: Prime, gens: &[HolElt], cap: usize) -> Result<Self, Error> {
        for g in gens {
            if g.prime() != p {
                return Err(Error::PrimeMismatch {
                    left: p.get(),
                    right: g.prime().get(),
                });
            }
        }
        let id = HolElt::identity(p);
        let mut seen = BTreeSet::new();
        seen.insert(id);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x * *g;
                if seen.insert(y) {
                    if seen.len() > cap {
                        return Err(Error::ClosureCap { cap });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(SubgroupHol {
            p,
            generators: gens.to_vec(),
            elements: seen.into_iter().collect(),
        })
    }

    /// Wraps an element list already known to be a subgroup.
    /// An empty `generators` list is replaced by a greedy generating set.
    pub fn from_elements(p: Prime, generators: Vec<HolElt>, mut elements: Vec<HolElt>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let generators = if generators.is_empty() {
            greedy_generators(p, &elements)
        } else {
            generators
        };
        SubgroupHol {
            p,
            generators,
            elements,
        }
    }

    /// The left regular copy `{(n, id)}` of `M1`.
    pub fn translations(p: Prime) -> Self {
        let gens = alloc::vec![
            HolElt::translation(M1Elt::sigma(p)),
            HolElt::translation(M1Elt::tau(p)),
        ];
        let elements = crate::heisenberg::elements(p)
            .map(HolElt::translation)
            .collect();
        Self::from_elements(p, gens, elements)
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[HolElt] {
        &self.elements
    }

    pub fn generators(&self) -> &[HolElt] {
        &self.generators
    }

    pub fn contains(&self, g: &HolElt) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn key(&self) -> CanonicalKey {
        CanonicalKey(self.elements.iter().map(HolElt::code).collect())
    }

    /// Order `p^3` and the orbit of `1` is everything.
    pub fn is_regular(&self) -> bool {
        let q = self.p.as_u64().pow(3) as usize;
        if self.order() != q {
            return false;
        }
        let one = M1Elt::identity(self.p);
        let mut hit = alloc::vec![false; q];
        for g in &self.elements {
            let i = g.act(&one).index();
            if hit[i] {
                return false;
            }
            hit[i] = true;
        }
        true
    }

    /// Distinct automorphism parts, sorted.
    pub fn theta_image(&self) -> Vec<AutM1Elt> {
        let mut v: Vec<AutM1Elt> = self.elements.iter().map(HolElt::theta).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.effective_generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| *a * *b == *b * *a))
    }

    fn effective_generators(&self) -> Vec<HolElt> {
        if self.generators.is_empty() {
            self.elements.clone()
        } else {
            self.generators.clone()
        }
    }

    pub fn element_order(g: &HolElt) -> u64 {
        let mut x = *g;
        let mut k = 1;
        while !x.is_identity() {
            x = x * *g;
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .map(Self::element_order)
            .max()
            .unwrap_or(1)
    }

    /// Minimal number of generators, found greedily modulo the Frattini
    /// subgroup. The Frattini subgroup is taken to be generated by `p`-th
    /// powers and commutators of the generators, which holds for groups of
    /// class at most two and in particular for every group of order `p^3`.
    pub fn min_generators(&self) -> usize {
        let gens = self.effective_generators();
        let mut frattini: Vec<HolElt> =
            gens.iter().map(|g| g.pow(self.p.as_u64() as i64)).collect();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                frattini.push(a.inv() * b.inv() * *a * *b);
            }
        }
        let mut span = SubgroupHol::generate(self.p, &frattini)
            .expect("subgroup of a finite subgroup")
            .elements;
        let mut rank = 0;
        while span.len() < self.order() {
            let next = *self
                .elements
                .iter()
                .find(|g| span.binary_search(g).is_err())
                .expect("span is a proper subset");
            frattini.push(next);
            rank += 1;
            span = SubgroupHol::generate(self.p, &frattini)
                .expect("subgroup of a finite subgroup")
                .elements;
        }
        rank
    }

    pub fn isomorphism_type(&self) -> Result<GroupType, Error> {
        let q = self.p.as_u64();
        if self.order() as u64 != q * q * q {
            return Err(Error::WrongOrder {
                expected: (q * q * q) as usize,
                found: self.order(),
            });
        }
        let abelian = self.is_abelian();
        let exponent = self.exponent();
        let rank = self.min_generators();
        Ok(GroupType::classify(abelian, exponent, q, rank)
            .expect("every group of order p^3 is listed"))
    }

    /// `f S f^-1`, computed elementwise.
    pub fn conjugate(&self, f: &AutM1Elt) -> SubgroupHol {
        let fi = f.inverse();
        let conj = |g: &HolElt| HolElt {
            n: f.apply(&g.n),
            alpha: f.compose(&g.alpha).compose(&fi),
        };
        SubgroupHol::from_elements(
            self.p,
            self.generators.iter().map(conj).collect(),
            self.elements.iter().map(conj).collect(),
        )
    }

    /// The subgroup obtained by conjugating the generators and regenerating.
    pub fn conjugate_by_generators(&self, f: &AutM1Elt) -> Result<SubgroupHol, Error> {
        let gens: Vec<HolElt> = self.generators.iter().map(|g| conj_by_aut(f, g)).collect();
        SubgroupHol::generate(self.p, &gens)
    }
}
