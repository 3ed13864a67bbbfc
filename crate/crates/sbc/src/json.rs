//! Serializable views of core types. Every map is a `BTreeMap` so output
//! is byte-stable.

use std::collections::BTreeMap;

use serde::Serialize;

use sbc_core::classification::{ClassificationRecord, CountReport, Tally};
use sbc_core::families::ThetaSize;
use sbc_core::{AutM1Elt, GroupType, HolElt, M1Elt, SubgroupHol};

pub fn m1(x: &M1Elt) -> [u16; 3] {
    [x.a, x.b, x.c]
}

#[derive(Serialize)]
pub struct Aut {
    pub b1: u16,
    pub b2: u16,
    #[serde(rename = "A")]
    pub a: [u16; 4],
}

impl From<&AutM1Elt> for Aut {
    fn from(f: &AutM1Elt) -> Self {
        Aut {
            b1: f.b1,
            b2: f.b2,
            a: f.m.a,
        }
    }
}

#[derive(Serialize)]
pub struct Hol {
    pub n: [u16; 3],
    pub alpha: Aut,
}

impl From<&HolElt> for Hol {
    fn from(g: &HolElt) -> Self {
        Hol {
            n: m1(&g.n),
            alpha: (&g.alpha).into(),
        }
    }
}

pub fn hols(gs: &[HolElt]) -> Vec<Hol> {
    gs.iter().map(Hol::from).collect()
}

#[derive(Serialize)]
pub struct Subgroup {
    pub generators: Vec<Hol>,
    pub order: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub key: String,
}

impl Subgroup {
    pub fn new(s: &SubgroupHol) -> Self {
        Subgroup {
            generators: hols(s.generators()),
            order: s.order(),
            kind: s
                .isomorphism_type()
                .map(|t| t.label().to_string())
                .unwrap_or_else(|_| "unknown".into()),
            key: s.key().to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct Record {
    pub id: String,
    pub theta: &'static str,
    pub structure: &'static str,
    pub autbr_order: u64,
    pub orbit_size: u64,
    pub socle_order: u64,
    pub ann_order: u64,
    pub generators: Vec<Hol>,
    pub canonical_key: Option<String>,
}

impl Record {
    pub fn new(r: &ClassificationRecord, generators: &[HolElt]) -> Self {
        Record {
            id: r.id.clone(),
            theta: r.theta.label(),
            structure: r.structure.label(),
            autbr_order: r.autbr_order,
            orbit_size: r.orbit_size,
            socle_order: r.socle_order,
            ann_order: r.annihilator_order,
            generators: hols(generators),
            canonical_key: r.canonical_key.as_ref().map(|k| k.to_string()),
        }
    }
}

/// `{structure: {theta: n}}`.
pub type Nested = BTreeMap<&'static str, BTreeMap<&'static str, u128>>;

pub fn nested(t: &Tally) -> Nested {
    let mut out = Nested::new();
    for ((g, theta), n) in t {
        out.entry(g.label()).or_default().insert(theta.label(), *n);
    }
    out
}

#[derive(Serialize)]
pub struct ClosedForm {
    pub braces: Nested,
    pub hgs: Nested,
}

#[derive(Serialize)]
pub struct OracleSide {
    pub regular_subgroups: Nested,
    pub hgs: Nested,
}

#[derive(Serialize)]
pub struct Counts {
    pub p: u32,
    pub braces: Nested,
    pub hgs: Nested,
    pub oracle: Option<OracleSide>,
    pub closed_form: ClosedForm,
    pub all_match: bool,
}

impl From<&CountReport> for Counts {
    fn from(c: &CountReport) -> Self {
        Counts {
            p: c.p.get(),
            braces: nested(&c.braces),
            hgs: nested(&c.hgs),
            oracle: c.oracle.as_ref().map(|(raw, hgs)| OracleSide {
                regular_subgroups: nested(raw),
                hgs: nested(hgs),
            }),
            closed_form: ClosedForm {
                braces: nested(&c.closed_form.braces),
                hgs: nested(&c.closed_form.hgs),
            },
            all_match: c.all_match(),
        }
    }
}

/// Type totals with every non-occurring type folded into `other`.
pub fn type_totals(by_type: &BTreeMap<GroupType, u64>) -> BTreeMap<&'static str, u64> {
    let mut out = BTreeMap::from([("M1", 0), ("Cp3", 0), ("other", 0)]);
    for (g, n) in by_type {
        let slot = match g {
            GroupType::HeisenbergM1 | GroupType::ElemAbelianP3 => g.label(),
            _ => "other",
        };
        *out.get_mut(slot).expect("slot exists") += n;
    }
    out
}

pub fn theta_label(t: ThetaSize) -> &'static str {
    t.label()
}

pub fn to_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
