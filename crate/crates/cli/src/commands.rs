use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use serde_json::{json, Value};
use uclab_core::contact::{check_contact, check_hypercontact, derive_contact, derive_hypercontact};
use uclab_core::families::{enumerate_grills_up_to, enumerate_stacks_up_to};
use uclab_core::io::Doc;
use uclab_core::limits::{Limits, ENV_MAX_ATOMS};
use uclab_core::simplicial::{check_complex, enumerate_complexes, enumerate_ucs, sigma};
use uclab_core::stacksys::check_ss;
use uclab_core::topology::{intersection_uc, rc_algebra};
use uclab_core::uca::{extend_by_atoms, extend_by_grills, extend_by_set, uc_join, uc_meet};
use uclab_core::{FiniteBooleanAlgebra, Ultracontact};

use crate::suites::{self, SUITES};
use crate::Target;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Violation,
}

pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub data: Value,
    pub counterexample: Option<Value>,
}

impl Outcome {
    fn pass(text: String, data: Value) -> Self {
        Self {
            status: Status::Pass,
            text,
            data,
            counterexample: None,
        }
    }

    pub fn violation(text: String, counterexample: Value) -> Self {
        Self {
            status: Status::Violation,
            text: text + "\n",
            data: Value::Null,
            counterexample: Some(counterexample),
        }
    }

    pub fn report(&self) -> Value {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Violation => "violation",
        };
        json!({
            "status": status,
            "message": self.text.trim_end(),
            "data": self.data,
            "counterexample": self.counterexample,
        })
    }
}

fn load(path: &Path) -> anyhow::Result<Doc> {
    Doc::load(path).with_context(|| format!("reading {}", path.display()))
}

/// Writes `doc` to `out`, or appends it to the text when there is no file.
fn emit(doc: &Doc, out: Option<&Path>, text: &mut String) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            doc.save(path)?;
            writeln!(text, "wrote {}", path.display())?;
        }
        None => writeln!(text, "{}", doc.to_json())?,
    }
    Ok(())
}

fn describe_uc(k: &Ultracontact<'_>) -> String {
    format!("{k} ({} faces)", k.faces().len())
}

pub fn check(input: &Path) -> anyhow::Result<Outcome> {
    let doc = load(input)?;
    let text = match &doc {
        Doc::Algebra { .. } => {
            let alg = doc.algebra()?;
            format!("valid algebra with {} atoms", alg.n_atoms())
        }
        Doc::Family { .. } | Doc::Stack { .. } => {
            let alg = doc.algebra()?;
            let f = doc.family(&alg)?;
            let c = f.classify();
            format!("family {f}\n{}", serde_json::to_string_pretty(&c)?)
        }
        Doc::Uc { .. } => {
            let alg = doc.algebra()?;
            let k = doc.uc(&alg)?;
            format!("valid ultracontact: {}", describe_uc(&k))
        }
        Doc::StackSystem { .. } => {
            let alg = doc.algebra()?;
            let s = check_ss(&alg, doc.stacks(&alg)?)?;
            format!("valid stack system with {} stacks", s.len())
        }
        Doc::Contact { .. } => {
            let alg = doc.algebra()?;
            let c = check_contact(&doc.relation(&alg)?)?;
            format!("valid contact relation with {} related pairs", c.pairs().len())
        }
        Doc::Hypercontact { .. } => {
            let alg = doc.algebra()?;
            let h = check_hypercontact(&doc.family_system(&alg)?)?;
            format!("valid hypercontact with {} members", h.members().len())
        }
        Doc::Complex { .. } => {
            let c = check_complex(&doc.complex()?)?;
            format!("valid simplicial complex: {c}")
        }
        Doc::Space { .. } => {
            let x = doc.space()?;
            format!("valid topology on {} points with {} open sets", x.n_points(), x.opens().count())
        }
    };
    Ok(Outcome::pass(text + "\n", json!({"kind": doc.kind()})))
}

fn within_cap(what: &str, atoms: usize, cap: usize) -> anyhow::Result<()> {
    if atoms > cap {
        bail!("{what} is limited to {cap} atoms, got {atoms} (raise it with {ENV_MAX_ATOMS})");
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub enum Listing {
    Stacks,
    Grills,
    Ucs,
    Complexes,
}

pub fn enumerate(what: Listing, atoms: usize) -> anyhow::Result<Outcome> {
    let limits = Limits::from_env()?;
    let alg = FiniteBooleanAlgebra::with_atoms(atoms)?;
    let mut text = String::new();
    let items: Vec<Value> = match what {
        Listing::Stacks => {
            let stacks = enumerate_stacks_up_to(&alg, limits.stacks)?;
            writeln!(text, "{} stacks on {atoms} atoms", stacks.len())?;
            for s in &stacks {
                writeln!(text, "  {s}")?;
            }
            stacks.iter().map(|s| serde_json::to_value(Doc::of_stack(s))).collect::<Result<_, _>>()?
        }
        Listing::Grills => {
            let grills = enumerate_grills_up_to(&alg, limits.grills)?;
            writeln!(text, "{} grills on {atoms} atoms", grills.len())?;
            for g in &grills {
                writeln!(text, "  {g}")?;
            }
            grills.iter().map(|g| serde_json::to_value(Doc::of_family(g))).collect::<Result<_, _>>()?
        }
        Listing::Ucs => {
            within_cap("ultracontact enumeration", atoms, limits.ucs)?;
            let ucs = enumerate_ucs(&alg)?;
            writeln!(text, "{} ultracontacts on {atoms} atoms", ucs.len())?;
            for k in &ucs {
                writeln!(text, "  {k}")?;
            }
            ucs.iter()
                .map(|k| Ok(serde_json::to_value(Doc::of_complex(&sigma(k)))?))
                .collect::<anyhow::Result<_>>()?
        }
        Listing::Complexes => {
            within_cap("complex enumeration", atoms, limits.complexes)?;
            let cs = enumerate_complexes(alg.atom_names())?;
            writeln!(text, "{} complexes on {atoms} vertices", cs.len())?;
            for c in &cs {
                writeln!(text, "  {c}")?;
            }
            cs.iter().map(|c| serde_json::to_value(Doc::of_complex(c))).collect::<Result<_, _>>()?
        }
    };
    Ok(Outcome::pass(text, json!({"count": items.len(), "items": items})))
}

fn load_uc<'a>(doc: &Doc, alg: &'a FiniteBooleanAlgebra) -> anyhow::Result<Ultracontact<'a>> {
    Ok(doc.uc(alg)?)
}

pub fn convert(input: &Path, to: Target, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let doc = load(input)?;
    let alg = doc.algebra()?;
    let k = load_uc(&doc, &alg)?;
    let result = match to {
        Target::Uc => Doc::of_uc(&k, false)?,
        Target::StackSystem => Doc::of_stack_system(&k.stack_system()?),
        Target::Complex => Doc::of_complex(&sigma(&k)),
    };
    let mut text = String::new();
    emit(&result, out, &mut text)?;
    Ok(Outcome::pass(text, serde_json::to_value(&result)?))
}

pub fn derive(input: &Path, hyper: bool, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let doc = load(input)?;
    let alg = doc.algebra()?;
    let k = load_uc(&doc, &alg)?;
    let result = if hyper {
        Doc::of_family_system(derive_hypercontact(&k)?.members())
    } else {
        Doc::of_relation(derive_contact(&k)?.relation())
    };
    let mut text = String::new();
    emit(&result, out, &mut text)?;
    Ok(Outcome::pass(text, serde_json::to_value(&result)?))
}

pub fn lattice(inputs: &[PathBuf], meet: bool, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let docs: Vec<Doc> = inputs.iter().map(|p| load(p)).collect::<anyhow::Result<_>>()?;
    let alg = docs[0].algebra()?;
    for (d, p) in docs.iter().zip(inputs) {
        if d.algebra()?.atom_names() != alg.atom_names() {
            bail!("{} lives on a different algebra", p.display());
        }
    }
    let ks: Vec<Ultracontact> = docs.iter().map(|d| load_uc(d, &alg)).collect::<anyhow::Result<_>>()?;
    let k = if meet { uc_meet(&ks)? } else { uc_join(&ks)? };
    let mut text = format!("{}: {}\n", if meet { "meet" } else { "join" }, describe_uc(&k));
    let result = Doc::of_uc(&k, false)?;
    emit(&result, out, &mut text)?;
    Ok(Outcome::pass(text, serde_json::to_value(&result)?))
}

pub enum Extension {
    Grills(Vec<String>),
    Atoms(String),
    Set(String),
}

pub fn extend(input: &Path, how: Extension, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let doc = load(input)?;
    let alg = doc.algebra()?;
    let k = load_uc(&doc, &alg)?;
    let result = match how {
        Extension::Grills(gs) => {
            let gs = gs.iter().map(|g| alg.parse_family(g)).collect::<Result<Vec<_>, _>>()?;
            extend_by_grills(&k, &gs)?
        }
        Extension::Atoms(a) => extend_by_atoms(&k, &alg.parse_family(&a)?)?,
        Extension::Set(m) => {
            let m = alg.parse_family(&m)?;
            let ext = extend_by_set(&k, &m)?;
            match ext.result {
                Ok(k) => k,
                Err(v) => {
                    let text = format!("K^M is not an ultracontact for M = {m}: {v}");
                    return Ok(Outcome::violation(text, serde_json::to_value(&v)?));
                }
            }
        }
    };
    let mut text = format!("extended: {}\n", describe_uc(&result));
    let doc = Doc::of_uc(&result, false)?;
    emit(&doc, out, &mut text)?;
    Ok(Outcome::pass(text, serde_json::to_value(&doc)?))
}

pub fn topology_uc(input: &Path, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let x = load(input)?.space()?;
    let rc = rc_algebra(&x)?;
    let k = intersection_uc(&rc)?;
    let mut text = String::new();
    writeln!(
        text,
        "regular closed algebra: {} elements, atoms {}",
        rc.algebra().carrier_size(),
        rc.algebra().atom_names().join(" ")
    )?;
    writeln!(text, "intersection ultracontact: {}", describe_uc(&k))?;
    let doc = Doc::of_uc(&k, false)?;
    emit(&doc, out, &mut text)?;
    Ok(Outcome::pass(text, serde_json::to_value(&doc)?))
}

pub fn list_suites() -> anyhow::Result<Outcome> {
    let mut text = String::new();
    for s in SUITES {
        writeln!(text, "{:<28} {}", s.id, s.about)?;
    }
    let ids: Vec<&str> = SUITES.iter().map(|s| s.id).collect();
    Ok(Outcome::pass(text, json!(ids)))
}

pub fn verify(theorem: Option<&str>) -> anyhow::Result<Outcome> {
    let chosen: Vec<&suites::Suite> = match theorem {
        Some(id) => vec![suites::find(id).with_context(|| {
            let ids: Vec<&str> = SUITES.iter().map(|s| s.id).collect();
            format!("unknown theorem id {id:?}; known ids: {}", ids.join(", "))
        })?],
        None => SUITES.iter().collect(),
    };
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut failed = Vec::new();
    for s in chosen {
        let start = Instant::now();
        let r = s.run()?;
        let secs = start.elapsed().as_secs_f64();
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(text, "{verdict} {:<28} {:>6} checks  {secs:.2}s", s.id, r.checks)?;
        for n in &r.notes {
            writeln!(text, "     {n}")?;
        }
        for f in &r.failures {
            writeln!(text, "     failed: {}", f.check)?;
        }
        if !r.passed() {
            failed.push(json!({"id": r.id, "failures": r.failures}));
        }
        reports.push(r);
    }
    let data = serde_json::to_value(&reports)?;
    if failed.is_empty() {
        Ok(Outcome::pass(text, data))
    } else {
        let mut o = Outcome::violation(text.trim_end().to_string(), json!(failed));
        o.data = data;
        Ok(o)
    }
}
