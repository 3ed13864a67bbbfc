//! Command-line front end for the skew brace classification engine.
//!
//! Every command returns its report as a string together with an exit
//! status, so the binary only has to route output.

pub mod cli;
pub mod engine;
pub mod json;
pub mod par;
pub mod verify;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use sbc_core::brace::SkewBrace;
use sbc_core::classification::{ClassificationRecord, CountReport, Tally};
use sbc_core::families::{all_representatives, representative_by_id, ThetaSize};
use sbc_core::oracle::{tally, OracleCounts};
use sbc_core::{Error, GroupType, M1Elt, Prime, SubgroupHol};

use cli::{Cli, Command, Format};

/// Validated settings for one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub prime: Prime,
    pub command: Command,
    pub format: Option<Format>,
    pub jobs: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, Error> {
        Ok(RunConfig {
            prime: Prime::new(cli.prime)?,
            command: cli.command.clone(),
            format: cli.format,
            jobs: cli.jobs.max(1),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub report: String,
}

impl Outcome {
    fn new(pass: bool, report: String) -> Self {
        Outcome {
            status: if pass {
                Status::Success
            } else {
                Status::VerificationFailed
            },
            report,
        }
    }
}

/// Orbits are expanded up to this prime by `classify`.
pub const ORBIT_EXPANSION_LIMIT: u32 = 5;

/// Runs a configured command. `Err` means a usage or configuration error.
pub fn run(cfg: &RunConfig) -> Result<Outcome, Error> {
    match &cfg.command {
        Command::Classify { theta } => cmd_classify(cfg, theta.map(ThetaSize::from)),
        Command::Count {
            oracle,
            oracle_budget,
        } => cmd_count(cfg, oracle.then_some(*oracle_budget)),
        Command::Oracle {
            oracle_budget,
            dump,
        } => cmd_oracle(cfg, *oracle_budget, *dump),
        Command::Verify {
            oracle,
            oracle_budget,
            inject_fault,
        } => cmd_verify(
            cfg,
            verify::VerifyOptions {
                oracle_budget: oracle.then_some(*oracle_budget),
                fault: *inject_fault,
            },
        ),
        Command::Brace { id } => cmd_brace(cfg, id),
        Command::Ybe { id, full_ybe } => cmd_ybe(cfg, id, *full_ybe),
    }
}

fn restrict(t: &Tally, theta: Option<ThetaSize>) -> Tally {
    t.iter()
        .filter(|((_, th), _)| theta.is_none_or(|x| *th == x))
        .map(|(k, v)| (*k, *v))
        .collect()
}

#[derive(Serialize)]
struct ClassifyReport {
    p: u32,
    theta: Option<&'static str>,
    records: Vec<json::Record>,
    counts: json::Counts,
    consistent: bool,
    stabilizers_as_predicted: bool,
    structures_as_expected: bool,
}

pub fn cmd_classify(cfg: &RunConfig, theta: Option<ThetaSize>) -> Result<Outcome, Error> {
    let p = cfg.prime;
    let reps: Vec<_> = all_representatives(p)
        .into_iter()
        .filter(|r| theta.is_none_or(|t| r.theta == t))
        .collect();
    let expand = p.get() <= ORBIT_EXPANSION_LIMIT;
    let c = engine::classify(p, &reps, expand, cfg.jobs)?;
    let mut counts = CountReport::new(p, &c.records, None);
    counts.closed_form.braces = restrict(&counts.closed_form.braces, theta);
    counts.closed_form.hgs = restrict(&counts.closed_form.hgs, theta);
    let counts_ok = if theta.is_none() {
        counts.all_match()
    } else {
        counts.braces == counts.closed_form.braces && counts.hgs == counts.closed_form.hgs
    };
    let structures = c
        .records
        .iter()
        .zip(&reps)
        .all(|(r, rep)| r.structure == rep.expected);
    let pass = c.consistent() && c.stabilizers_as_predicted() && structures && counts_ok;

    let report = match cfg.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut j = json::Counts::from(&counts);
            j.all_match = counts_ok;
            json::to_string(&ClassifyReport {
                p: p.get(),
                theta: theta.map(ThetaSize::label),
                records: c
                    .records
                    .iter()
                    .zip(&reps)
                    .map(|(r, rep)| json::Record::new(r, &rep.generators))
                    .collect(),
                counts: j,
                consistent: c.consistent(),
                stabilizers_as_predicted: c.stabilizers_as_predicted(),
                structures_as_expected: structures,
            })
        }
        Format::Csv => records_csv(&c.records),
        Format::Table => {
            let mut s = records_table(&c.records);
            s.push('\n');
            s.push_str(&counts_table(&counts));
            s
        }
    };
    Ok(Outcome::new(pass, report))
}

pub const CSV_HEADER: [&str; 7] = [
    "id",
    "theta",
    "structure",
    "autbr_order",
    "orbit_size",
    "socle_order",
    "ann_order",
];

fn records_csv(records: &[ClassificationRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record([
            r.id.clone(),
            r.theta.label().to_string(),
            r.structure.label().to_string(),
            r.autbr_order.to_string(),
            r.orbit_size.to_string(),
            r.socle_order.to_string(),
            r.annihilator_order.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

fn records_table(records: &[ClassificationRecord]) -> String {
    let width = records.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut s = format!(
        "{:<width$}  {:>5}  {:>9}  {:>11}  {:>10}  {:>5}  {:>3}\n",
        "id", "theta", "structure", "autbr_order", "orbit_size", "socle", "ann"
    );
    for r in records {
        let _ = writeln!(
            s,
            "{:<width$}  {:>5}  {:>9}  {:>11}  {:>10}  {:>5}  {:>3}",
            r.id,
            r.theta.label(),
            r.structure.label(),
            r.autbr_order,
            r.orbit_size,
            r.socle_order,
            r.annihilator_order
        );
    }
    s
}

/// Per-`|Theta|` brace and Hopf-Galois counts, computed beside closed form.
fn counts_table(c: &CountReport) -> String {
    let kinds = [GroupType::HeisenbergM1, GroupType::ElemAbelianP3];
    let get = |t: &Tally, g, th| t.get(&(g, th)).copied().unwrap_or(0);
    let mut s = format!("p = {}\n", c.p);
    let _ = writeln!(
        s,
        "{:>5}  {:>9}  {:>14}  {:>14}  {:>16}  {:>16}",
        "theta", "structure", "braces", "closed form", "hgs", "closed form"
    );
    for g in kinds {
        for th in ThetaSize::ALL {
            let row = [
                get(&c.braces, g, th),
                get(&c.closed_form.braces, g, th),
                get(&c.hgs, g, th),
                get(&c.closed_form.hgs, g, th),
            ];
            if row.iter().all(|&x| x == 0) {
                continue;
            }
            let _ = writeln!(
                s,
                "{:>5}  {:>9}  {:>14}  {:>14}  {:>16}  {:>16}",
                th.label(),
                g.label(),
                row[0],
                row[1],
                row[2],
                row[3]
            );
        }
        let _ = writeln!(
            s,
            "{:>5}  {:>9}  {:>14}  {:>14}  {:>16}  {:>16}",
            "all",
            g.label(),
            sbc_core::classification::total(&c.braces, g),
            c.closed_form.total_braces(g),
            sbc_core::classification::total(&c.hgs, g),
            c.closed_form.total_hgs(g)
        );
    }
    if let Some((raw, e)) = &c.oracle {
        for g in kinds {
            let _ = writeln!(
                s,
                "oracle {:>4}: {} regular subgroups, hgs {}",
                g.label(),
                sbc_core::classification::total(raw, g),
                sbc_core::classification::total(e, g)
            );
        }
    }
    let _ = writeln!(s, "all_match: {}", c.all_match());
    s
}

pub fn cmd_count(cfg: &RunConfig, oracle_budget: Option<u32>) -> Result<Outcome, Error> {
    let p = cfg.prime;
    let oracle = match oracle_budget {
        Some(b) => Some(tally(&engine::regular_subgroups(p, b, cfg.jobs)?)?),
        None => None,
    };
    let c = engine::classify(p, &all_representatives(p), false, cfg.jobs)?;
    let report = CountReport::new(p, &c.records, oracle.as_ref());
    let pass = report.all_match() && c.consistent();
    let text = match cfg.format.unwrap_or(Format::Json) {
        Format::Json => json::to_string(&json::Counts::from(&report)),
        Format::Csv => counts_csv(&report),
        Format::Table => counts_table(&report),
    };
    Ok(Outcome::new(pass, text))
}

fn counts_csv(c: &CountReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "structure",
        "theta",
        "braces",
        "braces_closed_form",
        "hgs",
        "hgs_closed_form",
    ])
    .expect("in-memory write");
    let keys: BTreeSet<_> = c.braces.keys().chain(c.closed_form.braces.keys()).collect();
    let get = |t: &Tally, k| t.get(k).copied().unwrap_or(0).to_string();
    for k in keys {
        w.write_record([
            k.0.label().to_string(),
            k.1.label().to_string(),
            get(&c.braces, k),
            get(&c.closed_form.braces, k),
            get(&c.hgs, k),
            get(&c.closed_form.hgs, k),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

#[derive(Serialize)]
struct OracleReport {
    p: u32,
    regular_subgroups: std::collections::BTreeMap<&'static str, u64>,
    by_theta: json::Nested,
    hgs: json::Nested,
    closed_form_hgs: json::Nested,
    matches_closed_form: bool,
    orbit_union_matches: Option<bool>,
    subgroups: Option<Vec<json::Subgroup>>,
}

pub fn cmd_oracle(cfg: &RunConfig, budget: u32, dump: bool) -> Result<Outcome, Error> {
    let p = cfg.prime;
    let subs = engine::regular_subgroups(p, budget, cfg.jobs)?;
    let counts = tally(&subs)?;
    let expand = p.get() <= ORBIT_EXPANSION_LIMIT;
    let c = engine::classify(p, &all_representatives(p), expand, cfg.jobs)?;
    let report = CountReport::new(p, &c.records, Some(&counts));
    let union = c.orbits.as_ref().map(|orbits| {
        let union: BTreeSet<_> = orbits.iter().flatten().cloned().collect();
        let found: BTreeSet<_> = subs.iter().map(SubgroupHol::key).collect();
        union == found
    });
    let others = others(&counts);
    let matches = report
        .oracle
        .as_ref()
        .is_some_and(|(_, e)| *e == report.closed_form.hgs);
    let pass = matches && others == 0 && union != Some(false);
    let text = match cfg.format.unwrap_or(Format::Json) {
        Format::Json | Format::Csv => {
            let (raw, e) = report.oracle.as_ref().expect("oracle counts supplied");
            json::to_string(&OracleReport {
                p: p.get(),
                regular_subgroups: json::type_totals(&counts.by_type),
                by_theta: json::nested(raw),
                hgs: json::nested(e),
                closed_form_hgs: json::nested(&report.closed_form.hgs),
                matches_closed_form: matches,
                orbit_union_matches: union,
                subgroups: dump.then(|| subs.iter().map(json::Subgroup::new).collect()),
            })
        }
        Format::Table => {
            let mut s = String::new();
            for (k, v) in json::type_totals(&counts.by_type) {
                let _ = writeln!(s, "{k:>5}: {v}");
            }
            s.push_str(&counts_table(&report));
            if let Some(u) = union {
                let _ = writeln!(s, "orbit union matches: {u}");
            }
            s
        }
    };
    Ok(Outcome::new(pass, text))
}

fn others(counts: &OracleCounts) -> u64 {
    counts.total() - counts.count(GroupType::HeisenbergM1) - counts.count(GroupType::ElemAbelianP3)
}

#[derive(Serialize)]
struct VerifyReport {
    p: u32,
    checks: Vec<verify::Check>,
    all_pass: bool,
}

pub fn cmd_verify(cfg: &RunConfig, opts: verify::VerifyOptions) -> Result<Outcome, Error> {
    let checks = verify::run(cfg.prime, cfg.jobs, opts)?;
    let all_pass = checks.iter().all(|c| c.pass);
    let text = match cfg.format.unwrap_or(Format::Table) {
        Format::Json => json::to_string(&VerifyReport {
            p: cfg.prime.get(),
            checks,
            all_pass,
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "result", "detail"])
                .expect("in-memory write");
            for c in &checks {
                w.write_record([c.name, if c.pass { "pass" } else { "FAIL" }, &c.detail])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
        }
        Format::Table => {
            let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(5);
            let mut s = String::new();
            for c in &checks {
                let mark = if c.pass { "pass" } else { "FAIL" };
                let _ = writeln!(s, "{:<width$}  {mark}  {}", c.name, c.detail);
            }
            let _ = writeln!(
                s,
                "{}",
                if all_pass {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                }
            );
            s
        }
    };
    Ok(Outcome::new(all_pass, text))
}

fn label_elt(p: Prime, x: u16) -> [u16; 3] {
    json::m1(&M1Elt::from_index(p, usize::from(x)))
}

#[derive(Serialize)]
struct PsiEntry {
    label: [u16; 3],
    element: json::Hol,
}

#[derive(Serialize)]
struct BraceReport {
    p: u32,
    id: String,
    theta: &'static str,
    additive: &'static str,
    multiplicative: &'static str,
    generators: Vec<json::Hol>,
    axiom: bool,
    psi: Vec<PsiEntry>,
    socle: Vec<[u16; 3]>,
    annihilator: Vec<[u16; 3]>,
}

pub fn cmd_brace(cfg: &RunConfig, id: &str) -> Result<Outcome, Error> {
    let p = cfg.prime;
    let rep = representative_by_id(p, id)?;
    let b = SkewBrace::from_subgroup(&rep.subgroup()?)?;
    let axiom = b.verify_axiom().is_ok();
    let report = BraceReport {
        p: p.get(),
        id: rep.id.clone(),
        theta: rep.theta.label(),
        additive: b.additive_type().label(),
        multiplicative: b.multiplicative_type().label(),
        generators: json::hols(&rep.generators),
        axiom,
        psi: b
            .labels()
            .map(|x| PsiEntry {
                label: label_elt(p, x),
                element: (&b.element(x).expect("brace built from a subgroup")).into(),
            })
            .collect(),
        socle: b.socle().into_iter().map(|x| label_elt(p, x)).collect(),
        annihilator: b
            .annihilator()
            .into_iter()
            .map(|x| label_elt(p, x))
            .collect(),
    };
    Ok(Outcome::new(axiom, json::to_string(&report)))
}

#[derive(Serialize)]
struct YbeReport {
    p: u32,
    id: String,
    size: usize,
    braid: bool,
    braid_witness: Option<[[u16; 3]; 3]>,
    nondegenerate: bool,
    involutive: bool,
    solution: Option<Vec<[[u16; 3]; 4]>>,
}

pub fn cmd_ybe(cfg: &RunConfig, id: &str, full: bool) -> Result<Outcome, Error> {
    let p = cfg.prime;
    let rep = representative_by_id(p, id)?;
    let b = SkewBrace::from_subgroup(&rep.subgroup()?)?;
    let r = b.ybe();
    let braid = r.verify_braid();
    let nondegenerate = r.verify_nondegenerate();
    let e = |x| label_elt(p, x);
    let solution = full.then(|| {
        b.labels()
            .flat_map(|x| b.labels().map(move |y| (x, y)))
            .map(|(x, y)| {
                let (u, v) = r.apply(x, y);
                [e(x), e(y), e(u), e(v)]
            })
            .collect()
    });
    let report = YbeReport {
        p: p.get(),
        id: rep.id.clone(),
        size: r.size(),
        braid: braid.is_ok(),
        braid_witness: braid.err().map(|w| [e(w.x), e(w.y), e(w.z)]),
        nondegenerate,
        involutive: r.is_involutive(),
        solution,
    };
    let text = match cfg.format.unwrap_or(Format::Json) {
        Format::Table => format!(
            "{} at p = {}: braid {}, non-degenerate {}, involutive {}\n",
            report.id, report.p, report.braid, report.nondegenerate, report.involutive
        ),
        _ => json::to_string(&report),
    };
    Ok(Outcome::new(report.braid && report.nondegenerate, text))
}
