//! Command-line front end. Documents are JSON; matrices are `{"p","mu","rows"}` and
//! submodules `{"p","mu","generators"}`.

use crate::coset::{DoubleCoset, ThetaSpec};
use crate::error::{Error, Result};
use crate::idempotent::{
    build_x, decompose_reduced, nilpotent_unit_normal_form, solve_lemma2, solve_uu, ReducedElement, XIdempotent,
};
use crate::induced::{
    all_indicators, bullet_trivial_characters, character_tools, commutant_dimension, coset_stabilization_check,
    indicator_operator, induce_for_spec, CosetSpace,
};
use crate::linalg::Mat;
use crate::partial_iso::{pi_functor, PartialIso};
use crate::ring::RingCtx;
use crate::stabilizer::{closure, membership, proof_identity_suite, quotient_circ_bullet, Law, StabilizerSpec, Tier};
use crate::submodule::Submodule;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

pub const DEFAULT_SEED: u64 = 20240607;
const DEFAULT_CAP: u64 = 1 << 20;

#[derive(Parser, Debug)]
#[command(name = "coset-lab", about = "Exact double-coset algebra over Z/p^mu")]
struct Cli {
    /// Read the input document from this file instead of stdin.
    #[arg(long = "in", global = true)]
    input: Option<String>,
    /// Write the output document to this file.
    #[arg(long = "out", global = true)]
    output: Option<String>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true)]
    p: Option<u64>,
    #[arg(long, global = true)]
    mu: Option<u32>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Residue arithmetic: {"a", "b"}.
    Ring {
        #[arg(value_enum)]
        op: RingOp,
    },
    /// Matrix operations: {"a", "b"}.
    Mat {
        #[arg(value_enum)]
        op: MatOp,
    },
    /// Submodule operations: {"a", "b"} or {"generators"}.
    Submodule {
        #[arg(value_enum)]
        op: SubOp,
    },
    /// Double cosets: {"g1", "g2"} or {"g"}.
    Coset {
        #[arg(value_enum)]
        op: CosetOp,
    },
    /// X idempotents and normal forms.
    Idem {
        #[arg(value_enum)]
        op: IdemOp,
    },
    /// Stabilizer tiers and closures: {"l", "m", "g"}.
    Stab {
        #[arg(value_enum)]
        op: StabOp,
    },
    /// Induced representations of GL(n): {"l", "m"}.
    Rep {
        #[arg(value_enum)]
        op: RepOp,
    },
    /// Line-oriented property report.
    Verify {
        #[arg(value_enum, default_value_t = Module::All)]
        module: Module,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RingOp {
    Add,
    Sub,
    Mul,
    Inv,
    Valuation,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MatOp {
    Mul,
    Inverse,
    Smith,
    Kernel,
    Reduce,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SubOp {
    Canon,
    Intersect,
    Sum,
    Contains,
    Present,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CosetOp {
    Mul,
    Eq,
    Pi,
    Theta,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum IdemOp {
    X,
    Product,
    Normalform,
    Decompose,
    Uu,
    Lemma2,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StabOp {
    Member,
    Closure,
    Quotient,
    Identities,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RepOp {
    Cosets,
    Induce,
    Indicators,
    Characters,
    Stabilize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Module {
    All,
    Ring,
    Linalg,
    Submodule,
    Coset,
    PartialIso,
    Idempotent,
    Stabilizer,
    Induced,
}

/// Run one command. `args` excludes the program name; `input` stands in for stdin.
pub fn run(args: &[String], input: &str) -> (String, i32) {
    let argv = std::iter::once("coset-lab".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (e.to_string(), 0),
                _ => error_doc(&Error::Malformed(e.to_string())),
            };
        }
    };
    let (out, code) = match execute(&cli, input) {
        Ok(Output::Doc(v)) => (serde_json::to_string_pretty(&v).expect("json") + "\n", 0),
        Ok(Output::Report(lines, ok)) => (lines, if ok { 0 } else { 1 }),
        Err(e) => error_doc(&e),
    };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &out) {
            return error_doc(&Error::Malformed(format!("cannot write {path}: {e}")));
        }
        return (String::new(), code);
    }
    (out, code)
}

fn error_doc(e: &Error) -> (String, i32) {
    let v = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
    (serde_json::to_string_pretty(&v).expect("json") + "\n", e.exit_code())
}

enum Output {
    Doc(Value),
    Report(String, bool),
}

fn execute(cli: &Cli, stdin: &str) -> Result<Output> {
    if let Cmd::Verify { module } = cli.cmd {
        let ctx = RingCtx::new(cli.p.unwrap_or(3), cli.mu.unwrap_or(1))?;
        let (text, ok) = verify_report(module, ctx, cli.seed, cli.jobs);
        return Ok(Output::Report(text, ok));
    }
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("cannot read {path}: {e}")))?,
        None => stdin.to_string(),
    };
    let doc: Value = if text.trim().is_empty() {
        json!({})
    } else {
        serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))?
    };
    if !doc.is_object() {
        return Err(Error::Malformed("input must be a JSON object".into()));
    }
    let d = Doc { v: &doc, p: cli.p.or(doc.get("p").and_then(Value::as_u64)), mu: cli.mu.or(doc.get("mu").and_then(Value::as_u64).map(|m| m as u32)) };
    let v = match cli.cmd {
        Cmd::Ring { op } => ring_cmd(&d, op)?,
        Cmd::Mat { op } => mat_cmd(&d, op)?,
        Cmd::Submodule { op } => sub_cmd(&d, op)?,
        Cmd::Coset { op } => coset_cmd(&d, op)?,
        Cmd::Idem { op } => idem_cmd(&d, op)?,
        Cmd::Stab { op } => stab_cmd(&d, op, cli.seed)?,
        Cmd::Rep { op } => rep_cmd(&d, op)?,
        Cmd::Verify { .. } => unreachable!(),
    };
    Ok(Output::Doc(v))
}

struct Doc<'a> {
    v: &'a Value,
    p: Option<u64>,
    mu: Option<u32>,
}

impl Doc<'_> {
    fn ctx(&self) -> Result<RingCtx> {
        match (self.p, self.mu) {
            (Some(p), Some(mu)) => RingCtx::new(p, mu),
            _ => Err(Error::Malformed("ring parameters p and mu are required".into())),
        }
    }

    fn field(&self, key: &str) -> Result<&Value> {
        self.v.get(key).ok_or_else(|| Error::Malformed(format!("missing field \"{key}\"")))
    }

    fn usize(&self, key: &str) -> Result<usize> {
        self.field(key)?.as_u64().map(|x| x as usize).ok_or_else(|| Error::Malformed(format!("\"{key}\" must be a nonnegative integer")))
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        if self.v.get(key).is_some() {
            self.usize(key)
        } else {
            Ok(default)
        }
    }

    fn mat(&self, key: &str) -> Result<Mat> {
        mat_from_json(self.field(key)?, self.p.zip(self.mu))
    }

    fn sub(&self, key: &str) -> Result<Submodule> {
        sub_from_json(self.field(key)?, self.p.zip(self.mu))
    }

    fn coset(&self, key: &str) -> Result<DoubleCoset> {
        coset_from_json(self.field(key)?, self.p.zip(self.mu))
    }

    fn spec(&self) -> Result<StabilizerSpec> {
        let l = self.sub("l")?;
        let m = self.sub("m")?;
        let n = self.usize_or("n", l.ambient_rank())?;
        StabilizerSpec::new(l, m, n)
    }
}

fn ctx_of(v: &Value, fallback: Option<(u64, u32)>) -> Result<RingCtx> {
    let p = v.get("p").and_then(Value::as_u64).or(fallback.map(|f| f.0));
    let mu = v.get("mu").and_then(Value::as_u64).map(|m| m as u32).or(fallback.map(|f| f.1));
    match (p, mu) {
        (Some(p), Some(mu)) => RingCtx::new(p, mu),
        _ => Err(Error::Malformed("ring parameters p and mu are required".into())),
    }
}

fn parse_rows(v: &Value, key: &str, modulus: u64) -> Result<Vec<Vec<u64>>> {
    let rows = v.get(key).and_then(Value::as_array).ok_or_else(|| Error::Malformed(format!("\"{key}\" must be an array of rows")))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Malformed("row must be an array".into()))?
                .iter()
                .map(|x| match x.as_u64() {
                    Some(x) if x < modulus => Ok(x),
                    _ => Err(Error::Malformed(format!("entry {x} is not an integer in [0, {modulus})"))),
                })
                .collect()
        })
        .collect()
}

fn rows_to_mat(ctx: RingCtx, rows: Vec<Vec<u64>>, cols: Option<usize>) -> Result<Mat> {
    let c = match rows.first() {
        Some(r) => r.len(),
        None => cols.unwrap_or(0),
    };
    if rows.iter().any(|r| r.len() != c) {
        return Err(Error::Malformed("rows have different lengths".into()));
    }
    let n = rows.len();
    Mat::from_vec(ctx, n, c, rows.concat())
}

pub fn mat_from_json(v: &Value, fallback: Option<(u64, u32)>) -> Result<Mat> {
    let ctx = ctx_of(v, fallback)?;
    let rows = parse_rows(v, "rows", ctx.modulus())?;
    rows_to_mat(ctx, rows, v.get("cols").and_then(Value::as_u64).map(|c| c as usize))
}

pub fn mat_to_json(m: &Mat) -> Value {
    let mut v = json!({ "p": m.ctx().p(), "mu": m.ctx().mu(), "rows": m.to_rows() });
    if m.rows() == 0 {
        v["cols"] = json!(m.cols());
    }
    v
}

pub fn sub_from_json(v: &Value, fallback: Option<(u64, u32)>) -> Result<Submodule> {
    let ctx = ctx_of(v, fallback)?;
    let rows = parse_rows(v, "generators", ctx.modulus())?;
    let rank = match (rows.first(), v.get("rank").and_then(Value::as_u64)) {
        (Some(r), Some(k)) if r.len() != k as usize => return Err(Error::Malformed("rank disagrees with generators".into())),
        (Some(r), _) => r.len(),
        (None, Some(k)) => k as usize,
        (None, None) => return Err(Error::Malformed("empty generator list needs \"rank\"".into())),
    };
    let g = rows_to_mat(ctx, rows, Some(rank))?;
    Ok(Submodule::from_generators(&g))
}

pub fn sub_to_json(s: &Submodule) -> Value {
    json!({ "p": s.ctx().p(), "mu": s.ctx().mu(), "rank": s.ambient_rank(), "generators": s.generators().to_rows() })
}

pub fn coset_from_json(v: &Value, fallback: Option<(u64, u32)>) -> Result<DoubleCoset> {
    let get = |k: &str| v.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| Error::Malformed(format!("coset needs \"{k}\"")));
    let rep = mat_from_json(v.get("rep").ok_or_else(|| Error::Malformed("coset needs \"rep\"".into()))?, fallback)?;
    DoubleCoset::new(get("alpha")?, get("beta")?, rep)
}

pub fn coset_to_json(g: &DoubleCoset) -> Value {
    json!({ "alpha": g.alpha(), "beta": g.beta(), "rep": mat_to_json(g.rep()) })
}

fn partial_to_json(x: &PartialIso) -> Value {
    json!({ "domain": sub_to_json(x.domain()), "matrix": mat_to_json(x.matrix()) })
}

fn ring_cmd(d: &Doc, op: RingOp) -> Result<Value> {
    let ctx = d.ctx()?;
    let int = |k: &str| -> Result<u64> {
        let x = d.field(k)?.as_i64().ok_or_else(|| Error::Malformed(format!("\"{k}\" must be an integer")))?;
        Ok(ctx.reduce(x))
    };
    let a = int("a")?;
    let result = match op {
        RingOp::Add => ctx.add(a, int("b")?),
        RingOp::Sub => ctx.sub(a, int("b")?),
        RingOp::Mul => ctx.mul(a, int("b")?),
        RingOp::Inv => ctx.inv(a)?,
        RingOp::Valuation => ctx.valuation(a) as u64,
    };
    Ok(json!({ "p": ctx.p(), "mu": ctx.mu(), "result": result }))
}

fn mat_cmd(d: &Doc, op: MatOp) -> Result<Value> {
    let a = d.mat("a")?;
    Ok(match op {
        MatOp::Mul => json!({ "product": mat_to_json(&a.try_mul(&d.mat("b")?)?) }),
        MatOp::Inverse => json!({ "inverse": mat_to_json(&a.try_inverse()?) }),
        MatOp::Smith => {
            let s = a.smith_diagonal();
            json!({ "u": mat_to_json(&s.u), "d": mat_to_json(&s.d), "v": mat_to_json(&s.v), "exponents": s.exponents })
        }
        MatOp::Kernel => json!({ "kernel": sub_to_json(&a.kernel()) }),
        MatOp::Reduce => json!({ "reduced": mat_to_json(&a.reduce_level(d.usize("level")? as u32)?) }),
    })
}

fn sub_cmd(d: &Doc, op: SubOp) -> Result<Value> {
    let describe = |s: &Submodule| json!({ "canonical": sub_to_json(s), "invariants": s.invariants(), "order": s.order() });
    Ok(match op {
        SubOp::Canon => {
            let s = sub_from_json(d.v, d.p.zip(d.mu))?;
            describe(&s)
        }
        SubOp::Intersect => describe(&d.sub("a")?.intersect(&d.sub("b")?)?),
        SubOp::Sum => describe(&d.sub("a")?.sum(&d.sub("b")?)?),
        SubOp::Contains => {
            let a = d.sub("a")?;
            let v: Vec<u64> = serde_json::from_value(d.field("v")?.clone()).map_err(|e| Error::Malformed(e.to_string()))?;
            json!({ "contains": a.contains(&v)? })
        }
        SubOp::Present => json!({ "as_kernel": mat_to_json(&d.sub("a")?.as_kernel()) }),
    })
}

fn coset_cmd(d: &Doc, op: CosetOp) -> Result<Value> {
    let cap = d.usize_or("cap", DEFAULT_CAP as usize)? as u128;
    Ok(match op {
        CosetOp::Mul => {
            let (g1, g2) = (d.coset("g1")?, d.coset("g2")?);
            let (a, b, c, dd) = g1.blocks();
            let (p, q, r, t) = g2.blocks();
            let trace = json!({
                "ap": mat_to_json(&a.try_mul(&p)?), "b": mat_to_json(&b), "aq": mat_to_json(&a.try_mul(&q)?),
                "cp": mat_to_json(&c.try_mul(&p)?), "d": mat_to_json(&dd), "cq": mat_to_json(&c.try_mul(&q)?),
                "r": mat_to_json(&r), "t": mat_to_json(&t),
            });
            json!({ "result": coset_to_json(&g1.compose(&g2)?), "trace": trace })
        }
        CosetOp::Eq => {
            let (g1, g2) = (d.coset("g1")?, d.coset("g2")?);
            match g1.find_equivalence(&g2, cap)? {
                Some((u, v)) => json!({ "equivalent": true, "witness": { "u": mat_to_json(&u), "v": mat_to_json(&v) } }),
                None => json!({ "equivalent": false, "witness": null }),
            }
        }
        CosetOp::Pi => {
            let pi = pi_functor(&d.coset("g")?);
            json!({ "plus": partial_to_json(&pi.xi_plus), "minus": partial_to_json(&pi.xi_minus) })
        }
        CosetOp::Theta => {
            let spec = ThetaSpec { beta: d.usize("beta")?, j: d.usize("j")?, n: d.usize("n")? };
            json!({ "theta": mat_to_json(&spec.build(d.ctx()?)?) })
        }
    })
}

fn idem_pair(v: &Value, fb: Option<(u64, u32)>) -> Result<XIdempotent> {
    let get = |k: &str| v.get(k).ok_or_else(|| Error::Malformed(format!("idempotent needs \"{k}\"")));
    XIdempotent::new(sub_from_json(get("l")?, fb)?, sub_from_json(get("m")?, fb)?)
}

fn idem_cmd(d: &Doc, op: IdemOp) -> Result<Value> {
    let fb = d.p.zip(d.mu);
    Ok(match op {
        IdemOp::X => {
            let (b, c) = (d.mat("b")?, d.mat("c")?);
            let x = XIdempotent::from_pair(&b, &c);
            json!({ "coset": coset_to_json(&build_x(&b, &c)?), "l": sub_to_json(&x.l), "m": sub_to_json(&x.m) })
        }
        IdemOp::Product => {
            let x1 = idem_pair(d.field("x1")?, fb)?;
            let x2 = idem_pair(d.field("x2")?, fb)?;
            let x = x1.product(&x2)?;
            json!({ "l": sub_to_json(&x.l), "m": sub_to_json(&x.m), "x1_precedes_x2": x1.precedes(&x2)?, "x2_precedes_x1": x2.precedes(&x1)? })
        }
        IdemOp::Normalform => {
            let f = nilpotent_unit_normal_form(&d.mat("a")?)?;
            json!({ "zeta": mat_to_json(&f.zeta), "n": f.n, "k": f.k })
        }
        IdemOp::Decompose => match decompose_reduced(&d.coset("g")?)? {
            ReducedElement::Zero => json!({ "kind": "zero" }),
            r @ ReducedElement::Element { .. } => {
                let rebuilt = r.rebuild().ok_or(Error::NotInvertible)?;
                let ReducedElement::Element { a, x, b, c, u } = r else { unreachable!() };
                json!({
                    "kind": "element", "a": mat_to_json(&a), "b": mat_to_json(&b), "c": mat_to_json(&c),
                    "u": mat_to_json(&u), "l": sub_to_json(&x.l), "m": sub_to_json(&x.m), "rebuilt": coset_to_json(&rebuilt),
                })
            }
        },
        IdemOp::Uu => {
            let u = solve_uu(&d.mat("alpha")?, &d.mat("beta")?, &d.mat("gamma")?, &d.mat("delta")?)?;
            json!({ "u": mat_to_json(&u) })
        }
        IdemOp::Lemma2 => json!({ "u": mat_to_json(&solve_lemma2(&d.mat("b")?, &d.mat("c")?)?) }),
    })
}

fn stab_cmd(d: &Doc, op: StabOp, seed: u64) -> Result<Value> {
    let cap = d.usize_or("cap", DEFAULT_CAP as usize)?;
    Ok(match op {
        StabOp::Member => {
            let tier = match d.v.get("tier").and_then(Value::as_str).unwrap_or("hat") {
                "hat" => Tier::Hat,
                "circ" => Tier::Circ,
                "bullet" => Tier::Bullet,
                t => return Err(Error::Malformed(format!("unknown tier {t}"))),
            };
            let (member, w) = membership(&d.mat("g")?, &d.spec()?, tier)?;
            let opt = |m: &Option<Mat>| m.as_ref().map(mat_to_json);
            let witness = w.map(|w| json!({ "s": opt(&w.s), "t": opt(&w.t), "u": opt(&w.u), "v": mat_to_json(&w.v), "w": mat_to_json(&w.w) }));
            json!({ "member": member, "witness": witness })
        }
        StabOp::Closure => {
            let gens = d
                .field("generators")?
                .as_array()
                .ok_or_else(|| Error::Malformed("\"generators\" must be an array of matrices".into()))?
                .iter()
                .map(|g| mat_from_json(g, d.p.zip(d.mu)))
                .collect::<Result<Vec<_>>>()?;
            let law = match d.v.get("law").and_then(Value::as_str).unwrap_or("group") {
                "group" => Law::Group,
                "involution" => Law::SemigroupWithInvolution,
                l => return Err(Error::Malformed(format!("unknown law {l}"))),
            };
            let c = closure(&gens, law, cap)?;
            json!({ "size": c.len(), "complete": c.complete })
        }
        StabOp::Quotient => {
            let q = quotient_circ_bullet(&d.spec()?, cap)?;
            json!({ "order": q.order, "circ": q.circ.len(), "bullet": q.bullet.len(), "reps": q.reps.iter().map(mat_to_json).collect::<Vec<_>>() })
        }
        StabOp::Identities => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let reports = proof_identity_suite(d.ctx()?, d.usize_or("m", 2)?, d.usize_or("instances", 20)?, &mut rng);
            let v: Vec<Value> = reports.iter().map(|r| json!({ "name": r.name, "passed": r.passed, "failed": r.failed })).collect();
            json!({ "reports": v, "ok": reports.iter().all(|r| r.ok()) })
        }
    })
}

fn rep_cmd(d: &Doc, op: RepOp) -> Result<Value> {
    let cap = d.usize_or("cap", DEFAULT_CAP as usize)?;
    if let RepOp::Stabilize = op {
        let r = coset_stabilization_check(&d.coset("g1")?, &d.coset("g2")?, 0..=d.usize_or("j_max", 4)?, cap as u128)?;
        return Ok(json!({
            "j_values": r.j_values, "constant": r.constant, "matches_compose": r.matches_compose,
            "classes": r.classes.iter().map(coset_to_json).collect::<Vec<_>>(),
        }));
    }
    let spec = d.spec()?;
    let cs = CosetSpace::for_spec(&spec, cap)?;
    Ok(match op {
        RepOp::Cosets => json!({
            "count": cs.len(), "subgroup_order": cs.subgroup.len(), "group_order": cs.group.len(),
            "reps": cs.reps.iter().map(mat_to_json).collect::<Vec<_>>(),
        }),
        RepOp::Induce => {
            let chars = bullet_trivial_characters(&cs, &spec)?;
            let i = d.usize_or("tau", 0)?;
            let tau = chars.get(i).ok_or_else(|| Error::NotACharacter(format!("index {i} of {}", chars.len())))?;
            let rep = induce_for_spec(&cs, &spec, tau)?;
            let ops: Vec<Value> = match d.v.get("elements").and_then(Value::as_array) {
                Some(gs) => gs
                    .iter()
                    .map(|g| {
                        let g = mat_from_json(g, d.p.zip(d.mu))?;
                        let gi = cs.group_index(&g).ok_or(Error::NotInvertible)?;
                        Ok(json!({ "g": mat_to_json(&g), "perm": rep.ops[gi].perm, "phase": rep.ops[gi].phase }))
                    })
                    .collect::<Result<_>>()?,
                None => Vec::new(),
            };
            json!({ "dim": rep.dim(), "e": tau.e, "characters": chars.len(), "cocycle": rep.cocycle_holds(), "operators": ops })
        }
        RepOp::Indicators => {
            let diag = indicator_operator(&cs, &spec, &d.sub("K")?, &d.sub("N")?)?;
            json!({ "diagonal": diag.iter().map(|&b| u8::from(b)).collect::<Vec<_>>() })
        }
        RepOp::Characters => {
            let inds = all_indicators(&cs, &spec)?;
            let rows: Vec<Value> = bullet_trivial_characters(&cs, &spec)?
                .iter()
                .enumerate()
                .map(|(i, tau)| {
                    let rep = induce_for_spec(&cs, &spec, tau)?;
                    let r = character_tools(&rep);
                    Ok(json!({
                        "tau": i, "dim": rep.dim(), "norm": (r.norm * 1e6).round() / 1e6, "integral": r.integral,
                        "irreducible_group": r.irreducible, "commutant_with_indicators": commutant_dimension(&rep, &inds),
                    }))
                })
                .collect::<Result<_>>()?;
            json!({ "characters": rows })
        }
        RepOp::Stabilize => unreachable!(),
    })
}

struct Check {
    id: String,
    pass: bool,
    detail: String,
}

fn tally(id: &str, results: impl IntoIterator<Item = bool>) -> Check {
    let (mut ok, mut n) = (0, 0);
    for r in results {
        n += 1;
        ok += usize::from(r);
    }
    Check { id: id.to_string(), pass: ok == n && n > 0, detail: format!("{ok}/{n}") }
}

fn rand_mat(ctx: RingCtx, r: usize, c: usize, rng: &mut ChaCha8Rng) -> Mat {
    Mat::from_fn(ctx, r, c, |_, _| rng.gen_range(0..ctx.modulus()) as i64)
}

fn rand_gl(ctx: RingCtx, n: usize, rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let m = rand_mat(ctx, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

fn rand_sub(ctx: RingCtx, n: usize, rng: &mut ChaCha8Rng) -> Submodule {
    let k = rng.gen_range(0..=n);
    Submodule::from_generators(&rand_mat(ctx, k, n, rng))
}

fn rand_coset(ctx: RingCtx, rng: &mut ChaCha8Rng, alpha: usize, beta: usize) -> DoubleCoset {
    let n = alpha.max(beta) + rng.gen_range(0..=1);
    DoubleCoset::new(alpha, beta, rand_gl(ctx, n, rng)).expect("sizes fit")
}

fn verify_module(module: Module, ctx: RingCtx, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ module as u64);
    let rng = &mut rng;
    let q = ctx.modulus();
    match module {
        Module::All => Vec::new(),
        Module::Ring => vec![
            tally("ring.distributive", (0..200).map(|_| {
                let (a, b, c) = (rng.gen_range(0..q), rng.gen_range(0..q), rng.gen_range(0..q));
                ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
            })),
            tally("ring.inverse", (0..200).map(|_| {
                let a = rng.gen_range(0..q);
                match ctx.inv(a) {
                    Ok(i) => ctx.is_unit(a) && ctx.mul(a, i) == 1,
                    Err(_) => !ctx.is_unit(a),
                }
            })),
            tally("ring.valuation", (0..200).map(|_| {
                let (a, b) = (rng.gen_range(0..q), rng.gen_range(0..q));
                let ab = ctx.mul(a, b);
                ab == 0 || ctx.valuation(ab) == ctx.valuation(a) + ctx.valuation(b)
            })),
        ],
        Module::Linalg => vec![
            tally("linalg.inverse", (0..100).map(|_| {
                let a = rand_mat(ctx, 3, 3, rng);
                match a.try_inverse() {
                    Ok(i) => (&a * &i).is_identity() && a.mod_p().is_invertible(),
                    Err(_) => !a.mod_p().is_invertible(),
                }
            })),
            tally("linalg.smith", (0..100).map(|_| {
                let a = rand_mat(ctx, 3, 4, rng);
                let s = a.smith_diagonal();
                &(&s.u * &s.d) * &s.v == a
            })),
            tally("linalg.kernel-image", (0..100).map(|_| {
                let a = rand_mat(ctx, 3, 2, rng);
                let k = a.kernel();
                let im = Submodule::from_generators(&a);
                (k.order() as u128) * (im.order() as u128) == (q as u128).pow(3) && (k.generators() * &a).is_zero()
            })),
        ],
        Module::Submodule => vec![
            tally("submodule.kernel-presentation", (0..100).map(|_| {
                let l = rand_sub(ctx, 3, rng);
                l.as_kernel().kernel() == l
            })),
            tally("submodule.modular-order", (0..100).map(|_| {
                let (a, b) = (rand_sub(ctx, 3, rng), rand_sub(ctx, 3, rng));
                a.sum(&b).unwrap().order() as u128 * a.intersect(&b).unwrap().order() as u128 == a.order() as u128 * b.order() as u128
            })),
            tally("submodule.orbit-invariants", (0..100).map(|_| {
                let l = rand_sub(ctx, 3, rng);
                l.act(&rand_gl(ctx, 3, rng)).unwrap().invariants() == l.invariants()
            })),
        ],
        Module::Coset => vec![
            tally("coset.associativity", (0..30).map(|_| {
                let (g1, g2, g3) = (rand_coset(ctx, rng, 1, 1), rand_coset(ctx, rng, 1, 1), rand_coset(ctx, rng, 1, 1));
                let l = g1.compose(&g2).and_then(|x| x.compose(&g3)).unwrap();
                let r = g2.compose(&g3).and_then(|x| g1.compose(&x)).unwrap();
                l.equivalent(&r, DEFAULT_CAP as u128).unwrap_or(false)
            })),
            tally("coset.involution", (0..30).map(|_| {
                let (g1, g2) = (rand_coset(ctx, rng, 1, 1), rand_coset(ctx, rng, 1, 1));
                let l = g1.compose(&g2).unwrap().involution();
                let r = g2.involution().compose(&g1.involution()).unwrap();
                l.equivalent(&r, DEFAULT_CAP as u128).unwrap_or(false)
            })),
        ],
        Module::PartialIso => vec![
            tally("partial-iso.functor", (0..100).map(|_| {
                let (g1, g2) = (rand_coset(ctx, rng, 2, 1), rand_coset(ctx, rng, 1, 2));
                let lhs = pi_functor(&g1.compose(&g2).unwrap());
                let rhs = pi_functor(&g1).l_compose(&pi_functor(&g2)).unwrap();
                lhs.l_equal(&rhs)
            })),
            tally("partial-iso.compatible", (0..100).map(|_| pi_functor(&rand_coset(ctx, rng, 2, 2)).is_compatible())),
        ],
        Module::Idempotent => vec![
            tally("idempotent.lemma2", (0..100).map(|_| {
                let b = rand_mat(ctx, 2, 2, rng).scale(ctx.p());
                let c = rand_mat(ctx, 2, 2, rng);
                let u = solve_lemma2(&b, &c).unwrap();
                let one = Mat::identity(ctx, 2);
                let cb = &c * &b;
                let lhs = &(&u.scale(2) - &(&(&u * &cb) * &u)) + &(&one - &cb).try_inverse().unwrap();
                lhs.is_zero() && u.is_invertible()
            })),
            tally("idempotent.x-product", (0..100).map(|_| {
                let x1 = XIdempotent::new(rand_sub(ctx, 2, rng), rand_sub(ctx, 2, rng)).unwrap();
                let x2 = XIdempotent::new(rand_sub(ctx, 2, rng), rand_sub(ctx, 2, rng)).unwrap();
                let composed = pi_functor(&x1.to_coset().compose(&x2.to_coset()).unwrap());
                composed.l_equal(&x1.product(&x2).unwrap().pi())
            })),
            tally("idempotent.normal-form", (0..100).map(|_| {
                let a = rand_mat(ctx, 2, 2, rng);
                let f = nilpotent_unit_normal_form(&a).unwrap();
                let conj = &(&f.zeta * &a) * &f.zeta.try_inverse().unwrap();
                let target = Mat::zeros(ctx, 2 - f.k, 2 - f.k).direct_sum(&Mat::identity(ctx, f.k));
                conj.pow(f.n) == target
            })),
        ],
        Module::Stabilizer => {
            let mut checks: Vec<Check> = proof_identity_suite(ctx, 2, 10, rng)
                .into_iter()
                .map(|r| Check { id: format!("stabilizer.{}", r.name), pass: r.ok(), detail: format!("{}/{}", r.passed, r.passed + r.failed) })
                .collect();
            checks.push(tally("stabilizer.tiers-nest", (0..100).map(|_| {
                let spec = StabilizerSpec::new(rand_sub(ctx, 2, rng), rand_sub(ctx, 2, rng), 2).unwrap();
                let g = rand_gl(ctx, 2, rng);
                let t = |tier| membership(&g, &spec, tier).unwrap().0;
                let (h, c, b) = (t(Tier::Hat), t(Tier::Circ), t(Tier::Bullet));
                (!b || c) && (!c || h)
            })));
            checks
        }
        Module::Induced => {
            let e1 = Submodule::from_vectors(ctx, 2, &[vec![1, 0]]);
            let spec = StabilizerSpec::new(e1, Submodule::zero(ctx, 2), 2).unwrap();
            let cs = CosetSpace::for_spec(&spec, DEFAULT_CAP as usize).unwrap();
            let tau = crate::induced::Character::trivial(&cs.subgroup);
            let rep = induce_for_spec(&cs, &spec, &tau).unwrap();
            let gsz = cs.group.len();
            let pairs: Vec<(usize, usize)> = (0..200).map(|_| (rng.gen_range(0..gsz), rng.gen_range(0..gsz))).collect();
            let subs: Vec<Submodule> = (0..20).map(|_| rand_sub(ctx, 2, rng)).collect();
            vec![
                Check { id: "induced.lagrange".into(), pass: cs.len() * cs.subgroup.len() == gsz, detail: format!("{} x {} = {gsz}", cs.len(), cs.subgroup.len()) },
                tally("induced.homomorphism", pairs.iter().map(|&p| rep.homomorphism_holds([p]))),
                tally("induced.equivariance", subs.chunks(2).map(|kn| {
                    let a = &cs.group[rng.gen_range(0..gsz)];
                    crate::induced::equivariance_check(&rep, &spec, a, &kn[0], &kn[1]).unwrap()
                })),
            ]
        }
    }
}

const MODULES: [Module; 8] =
    [Module::Ring, Module::Linalg, Module::Submodule, Module::Coset, Module::PartialIso, Module::Idempotent, Module::Stabilizer, Module::Induced];

/// `<check-id> PASS|FAIL <detail>` lines; the order does not depend on `jobs`.
pub fn verify_report(module: Module, ctx: RingCtx, seed: u64, jobs: usize) -> (String, bool) {
    let selected: Vec<Module> = if module == Module::All { MODULES.to_vec() } else { vec![module] };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    let results: Vec<Vec<Check>> = pool.install(|| selected.par_iter().map(|&m| verify_module(m, ctx, seed)).collect());
    let mut out = format!("# p={} mu={} seed={seed}\n", ctx.p(), ctx.mu());
    let mut ok = true;
    for c in results.iter().flatten() {
        ok &= c.pass;
        out += &format!("{} {} {}\n", c.id, if c.pass { "PASS" } else { "FAIL" }, c.detail);
    }
    (out, ok)
}
