//! Command-line front end. Every operation of the library is reachable as a
//! subcommand with deterministic text output and an optional `--json` form.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on a
//! domain error (bad precondition), 3 on a resource-cap error.

use std::io::Write;

use serde::{Deserialize, Serialize};

use permod::arith::is_prime;
use permod::complexity::{
    complexity_ext_square, complexity_perm, complexity_projective_power, complexity_sym_power,
    complexity_young, nu_p,
};
use permod::oracle::max_rank_ext_power;
use permod::partitions::{Composition, Partition};
use permod::powers::{
    classify_ext_power, is_indecomposable_sym_power, is_projective_ext_power,
    is_projective_sym_power, ModuleLabel,
};
use permod::scott::{scott_decomposition, hom_dims, PowerKind, ScottClass};
use permod::tabloids::dim_perm_module;
use permod::verify::run_battery;
use permod::young::{
    list_young_summands, thm_b_ext_partitions, thm_b_quantities, thm_b_sym_partition,
    thm_c_partitions,
};
use permod::{Caps, Error};

const USAGE: &str = "\
usage: permod <command> [options]

commands:
  dim                      --lambda L
  complexity perm          --p P --lambda L
  complexity young         --p P --lambda L
  complexity sym-power     --p P --lambda L --a A
  complexity ext-square    --p P --lambda L
  complexity ext-power     --p P --lambda L --a A     (oracle, exponential)
  complexity projective-power  --p P --a A --r R      (min of nu_p(a) and r)
  projective sym           --p P --lambda L --a A
  projective ext           --p P --lambda L --a A
  indecomposable sym       --lambda L --a A
  indecomposable ext       --p P --lambda L --a A
  young-summands           --p P --lambda L           (L plays the role of mu)
  thm-b sym                --p P --lambda L --a A
  thm-b ext                --p P --lambda L
  thm-c                    --p P --lambda L
  scott sym                --p P --lambda L
  scott ext                --p P --lambda L
  hom-dim                  --p P --lambda L
  verify                   [--n-max N]

options:
  --p <prime>       the characteristic
  --lambda <parts>  comma-separated partition, e.g. 5,4,2 (\"\" for empty)
  --a <int>         the power exponent
  --json            machine-readable output
  --cap <int>       degree cap for oracle scans (default 8)
  --n-max <int>     verify sweep bound (default 5)
";

struct Parsed {
    words: Vec<String>,
    p: Option<u64>,
    lambda: Option<String>,
    a: Option<u64>,
    r: Option<u64>,
    json: bool,
    cap: Option<usize>,
    n_max: Option<u64>,
}

fn parse_args(args: &[String]) -> Result<Parsed, String> {
    let mut parsed = Parsed {
        words: Vec::new(),
        p: None,
        lambda: None,
        a: None,
        r: None,
        json: false,
        cap: None,
        n_max: None,
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        let mut take = |name: &str| -> Result<String, String> {
            it.next().cloned().ok_or_else(|| format!("{name} needs a value"))
        };
        match arg.as_str() {
            "--p" => parsed.p = Some(take("--p")?.parse().map_err(|_| "--p must be an integer")?),
            "--a" => parsed.a = Some(take("--a")?.parse().map_err(|_| "--a must be an integer")?),
            "--r" => parsed.r = Some(take("--r")?.parse().map_err(|_| "--r must be an integer")?),
            "--lambda" => parsed.lambda = Some(take("--lambda")?),
            "--json" => parsed.json = true,
            "--cap" => {
                parsed.cap = Some(take("--cap")?.parse().map_err(|_| "--cap must be an integer")?)
            }
            "--n-max" => {
                parsed.n_max =
                    Some(take("--n-max")?.parse().map_err(|_| "--n-max must be an integer")?)
            }
            w if w.starts_with("--") => return Err(format!("unknown option {w}")),
            w => parsed.words.push(w.to_string()),
        }
    }
    Ok(parsed)
}

impl Parsed {
    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(cap) = self.cap {
            caps.oracle_degree = cap;
            caps.conjugacy_degree = cap.max(caps.conjugacy_degree);
        }
        caps
    }

    fn prime(&self) -> Result<u64, String> {
        let p = self.p.ok_or("missing --p")?;
        if !is_prime(p) {
            return Err(format!("--p must be prime, got {p}"));
        }
        Ok(p)
    }

    fn partition(&self) -> Result<Partition, String> {
        let text = self.lambda.as_deref().ok_or("missing --lambda")?;
        text.parse::<Partition>().map_err(|e| e.to_string())
    }

    fn exponent(&self) -> Result<u64, String> {
        self.a.ok_or_else(|| "missing --a".to_string())
    }
}

struct Outcome {
    body: String,
    code: i32,
}

fn render<T: Serialize>(json: bool, value: &T, text: String) -> Result<Outcome, Error> {
    if json {
        let mut body = serde_json::to_string_pretty(value)
            .map_err(|e| Error::Domain(format!("serialization failed: {e}")))?;
        body.push('\n');
        Ok(Outcome { body, code: 0 })
    } else {
        Ok(Outcome { body: text, code: 0 })
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DimOutput {
    pub op: String,
    pub lambda: Partition,
    pub value: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ComplexityOutput {
    pub op: String,
    pub p: u64,
    pub lambda: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    pub value: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct BoolOutput {
    pub op: String,
    pub p: Option<u64>,
    pub lambda: Partition,
    pub a: u64,
    pub value: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct LabelOutput {
    pub op: String,
    pub p: u64,
    pub lambda: Partition,
    pub a: u64,
    pub label: ModuleLabel,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SummandsOutput {
    pub op: String,
    pub p: u64,
    pub mu: Partition,
    pub summands: Vec<Partition>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ThmBSymOutput {
    pub op: String,
    pub p: u64,
    pub lambda: Partition,
    pub a: u64,
    pub d: u64,
    pub e: u64,
    pub q: Composition,
    pub r: Composition,
    pub r_reduced: Composition,
    pub lambda_a: Composition,
    pub mu: Partition,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ThmBExtOutput {
    pub op: String,
    pub p: u64,
    pub lambda: Partition,
    pub mus: Vec<Partition>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ThmCOutput {
    pub op: String,
    pub p: u64,
    pub lambda: Partition,
    pub mu: Partition,
    pub summands: Vec<Partition>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ScottOutput {
    pub op: String,
    pub kind: PowerKind,
    pub p: u64,
    pub lambda: Partition,
    pub classes: Vec<ScottClass>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct HomDimOutput {
    pub op: String,
    pub p: u64,
    pub lambda: Partition,
    pub sym: u64,
    pub ext: Option<u64>,
}

fn scott_table(kind: PowerKind, p: u64, l: &Partition, classes: &[ScottClass]) -> String {
    let power = match kind {
        PowerKind::Sym => "S^2",
        PowerKind::Ext => "Λ^2",
    };
    let mut out = format!("Scott summands of {power} M^{l}, p={p}\n");
    if classes.is_empty() {
        out.push_str("(none: the exterior square of a two-row shape has no Scott summand for odd p)\n");
        return out;
    }
    out.push_str("class  mult  key             members          vertex\n");
    for (i, class) in classes.iter().enumerate() {
        let members: Vec<&str> = class.members.iter().map(|m| m.label.as_str()).collect();
        out.push_str(&format!(
            "{:<6} {:<5} {:<15} {:<16} {}\n",
            i + 1,
            class.multiplicity,
            class.key.to_string(),
            members.join(","),
            class.vertex
        ));
    }
    out
}

fn dispatch(parsed: &Parsed) -> Result<Outcome, Error> {
    let caps = parsed.caps();
    let bad = |msg: String| Error::Domain(msg);
    let words: Vec<&str> = parsed.words.iter().map(|s| s.as_str()).collect();
    match words.as_slice() {
        ["dim"] => {
            let l = parsed.partition().map_err(bad)?;
            let d = dim_perm_module(&Composition::from(&l));
            let out = DimOutput { op: "dim".into(), lambda: l.clone(), value: d.to_string() };
            render(parsed.json, &out, format!("dim M^{l} = {d}\n"))
        }
        ["complexity", which @ ("perm" | "young" | "sym-power" | "ext-square" | "ext-power")] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let (value, a, note, text) = match *which {
                "perm" => {
                    let c = complexity_perm(&l, p);
                    (c, None, None, format!("c(M^{l}) = {c}  (p={p})\n"))
                }
                "young" => {
                    let c = complexity_young(&l, p)?;
                    (c, None, None, format!("c(Y^{l}) = {c}  (p={p})\n"))
                }
                "sym-power" => {
                    let a = parsed.exponent().map_err(bad)?;
                    let c = complexity_sym_power(&l, a, p)?;
                    (c, Some(a), None, format!("c(S^{a} M^{l}) = {c}  (p={p})\n"))
                }
                "ext-square" => {
                    let c = complexity_ext_square(&l, p)?;
                    (c, None, None, format!("c(Λ^2 M^{l}) = {c}  (p={p})\n"))
                }
                _ => {
                    // no closed form above the square: exhaustive oracle
                    let a = parsed.exponent().map_err(bad)?;
                    let c = max_rank_ext_power(&l, a, p, &caps)?;
                    (
                        c,
                        Some(a),
                        Some("oracle, exponential".to_string()),
                        format!("c(Λ^{a} M^{l}) = {c}  (p={p}; oracle, exponential)\n"),
                    )
                }
            };
            let out = ComplexityOutput {
                op: format!("complexity-{which}"),
                p,
                lambda: l,
                a,
                value,
                note,
            };
            render(parsed.json, &out, text)
        }
        ["complexity", "projective-power"] => {
            let p = parsed.prime().map_err(bad)?;
            let a = parsed.exponent().map_err(bad)?;
            let r = parsed.r.ok_or_else(|| bad("missing --r (the p-rank)".into()))?;
            let c = complexity_projective_power(r, a, p)?;
            let out = ComplexityOutput {
                op: "complexity-projective-power".into(),
                p,
                lambda: Partition::empty(),
                a: Some(a),
                value: c,
                note: Some(format!("min(nu_{p}({a}) = {}, r = {r})", nu_p(a, p))),
            };
            render(parsed.json, &out, format!("c = min(nu_p(a), r) = {c}\n"))
        }
        ["projective", which @ ("sym" | "ext")] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let a = parsed.exponent().map_err(bad)?;
            let value = match *which {
                "sym" => is_projective_sym_power(&l, a, p),
                _ => is_projective_ext_power(&l, a, p, &caps)?,
            };
            let out = BoolOutput {
                op: format!("projective-{which}"),
                p: Some(p),
                lambda: l,
                a,
                value,
            };
            render(parsed.json, &out, format!("projective: {value}\n"))
        }
        ["indecomposable", "sym"] => {
            let l = parsed.partition().map_err(bad)?;
            let a = parsed.exponent().map_err(bad)?;
            if a < 2 {
                return Err(Error::Domain(format!("power needs a ≥ 2, got {a}")));
            }
            let value = is_indecomposable_sym_power(&l, a);
            let out =
                BoolOutput { op: "indecomposable-sym".into(), p: None, lambda: l, a, value };
            render(parsed.json, &out, format!("indecomposable: {value}\n"))
        }
        ["indecomposable", "ext"] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let a = parsed.exponent().map_err(bad)?;
            let label = classify_ext_power(&l, a, p)?;
            let text = match &label {
                ModuleLabel::Decomposable => "indecomposable: false\n".to_string(),
                other => format!("indecomposable: true\nisomorphic to: {other}\n"),
            };
            let out = LabelOutput { op: "indecomposable-ext".into(), p, lambda: l, a, label };
            render(parsed.json, &out, text)
        }
        ["young-summands"] => {
            let p = parsed.prime().map_err(bad)?;
            let mu = parsed.partition().map_err(bad)?;
            let summands: Vec<Partition> =
                list_young_summands(&mu, p, &caps)?.into_iter().collect();
            let mut text = format!("Young summands of M^{mu}, p={p}:\n");
            for nu in &summands {
                text.push_str(&format!("{nu}\n"));
            }
            let out = SummandsOutput { op: "young-summands".into(), p, mu, summands };
            render(parsed.json, &out, text)
        }
        ["thm-b", "sym"] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let a = parsed.exponent().map_err(bad)?;
            let q = thm_b_quantities(&l, a, p)?;
            let mu = thm_b_sym_partition(&l, a, p)?;
            let (q_l, r_l) = permod::partitions::qr_split(&l, p);
            let text = format!(
                "d = {}\ne = {}\nq = {}\nr = {}\nr_reduced = {}\nlambda_a = {}\nmu = {mu}\n",
                q.d_la, q.e_la, q_l, r_l, q.r_la_a, q.lambda_a
            );
            let out = ThmBSymOutput {
                op: "thm-b-sym".into(),
                p,
                lambda: l,
                a,
                d: q.d_la,
                e: q.e_la,
                q: q_l,
                r: r_l,
                r_reduced: q.r_la_a,
                lambda_a: q.lambda_a,
                mu,
            };
            render(parsed.json, &out, text)
        }
        ["thm-b", "ext"] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let mus: Vec<Partition> = thm_b_ext_partitions(&l, p, &caps)?.into_iter().collect();
            let mut text = String::new();
            for mu in &mus {
                text.push_str(&format!("{mu}\n"));
            }
            let out = ThmBExtOutput { op: "thm-b-ext".into(), p, lambda: l, mus };
            render(parsed.json, &out, text)
        }
        ["thm-c"] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let (mu, nus) = thm_c_partitions(&l, p, &caps)?;
            let summands: Vec<Partition> = nus.into_iter().collect();
            let mut text = format!("mu = {mu}\nsummands:\n");
            for nu in &summands {
                text.push_str(&format!("{nu}\n"));
            }
            let out = ThmCOutput { op: "thm-c".into(), p, lambda: l, mu, summands };
            render(parsed.json, &out, text)
        }
        ["scott", which @ ("sym" | "ext")] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let kind = if *which == "sym" { PowerKind::Sym } else { PowerKind::Ext };
            let classes = scott_decomposition(&l, kind, p, &caps)?;
            let text = scott_table(kind, p, &l, &classes);
            let out = ScottOutput { op: format!("scott-{which}"), kind, p, lambda: l, classes };
            render(parsed.json, &out, text)
        }
        ["hom-dim"] => {
            let p = parsed.prime().map_err(bad)?;
            let l = parsed.partition().map_err(bad)?;
            let (sym, ext) = hom_dims(&l, p, &caps)?;
            let text = match ext {
                Some(e) => format!("sym = {sym}\next = {e}\n"),
                None => format!("sym = {sym}\next undefined for a one-row shape\n"),
            };
            let out = HomDimOutput { op: "hom-dim".into(), p, lambda: l, sym, ext };
            render(parsed.json, &out, text)
        }
        ["verify"] => {
            let n_max = parsed.n_max.unwrap_or(5);
            let reports = run_battery(n_max, &caps);
            let mut text = String::new();
            let mut failures = 0;
            for r in &reports {
                if r.pass {
                    text.push_str(&format!("PASS {}\n", r.name));
                } else {
                    failures += 1;
                    text.push_str(&format!("FAIL {}: {}\n", r.name, r.detail));
                }
            }
            text.push_str(&format!("{} checks, {} failed\n", reports.len(), failures));
            Ok(Outcome { body: text, code: if failures > 0 { 1 } else { 0 } })
        }
        [] => Err(Error::Domain(format!("missing command\n{USAGE}"))),
        _ => Err(Error::Domain(format!(
            "unknown command {:?}\n{USAGE}",
            parsed.words.join(" ")
        ))),
    }
}

/// Runs the CLI on the given arguments, writing the report to `out`.
/// Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    let parsed = match parse_args(args) {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(out, "error: {msg}");
            return 2;
        }
    };
    match dispatch(&parsed) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.body.as_bytes());
            outcome.code
        }
        Err(Error::Domain(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            2
        }
        Err(Error::Resource(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            3
        }
    }
}
