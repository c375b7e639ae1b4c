use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hopfkern::central::{central_data, enumerate_lattice, property_n, theorem_harness};
use hopfkern::corpus::{builtin, builtins, parse_algebra, Builtin, MAX_FILE_DIM};
use hopfkern::hopf::{integral, verify_hopf, HopfAlgebraData, HopfReport};
use hopfkern::kernels::{verify_2_10, KernelReport};
use hopfkern::rep::{character_table_text, value_bound_report, CharacterData, CharacterTable};
use hopfkern::{FieldElem, HopfError};

#[derive(Parser)]
#[command(name = "hopfkern", version, about = "Kernels of characters of semisimple Hopf algebras")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse algebras of larger dimension.
    #[arg(long, global = true, value_name = "N", default_value_t = MAX_FILE_DIM)]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Algebra file (JSON structure constants).
    file: Option<PathBuf>,
    /// Use a built-in algebra instead of a file.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf axioms.
    Verify(Input),
    /// Irreducible characters of H and H*.
    Irr(Input),
    /// Every kernel of every irreducible character.
    Kernels(Input),
    /// Hopf subalgebras of H and H*, with the normal-quotient correspondence.
    Lattice(Input),
    /// Central character subalgebras and the partitions they induce.
    Central(Input),
    /// Property (N) for H and H*.
    PropertyN(Input),
    /// Run every theorem check.
    Theorems(Input),
    /// Run everything over the built-in algebras.
    Corpus,
}

struct Outcome {
    passed: bool,
    json: Value,
    text: String,
}

/// Errors in the input exit with 2; failed certifications exit with 1.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<HopfError>() {
        Some(HopfError::Internal(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(err) => {
            let code = exit_code(&err);
            if cli.json {
                let doc = json!({ "error": format!("{err:#}"), "exit_code": code });
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            }
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Verify(input) => verify_cmd(&load(input, cli.max_dim)?),
        Command::Irr(input) => irr_cmd(&analyse(input, cli.max_dim)?),
        Command::Kernels(input) => kernels_cmd(&analyse(input, cli.max_dim)?),
        Command::Lattice(input) => lattice_cmd(&analyse(input, cli.max_dim)?),
        Command::Central(input) => central_cmd(&analyse(input, cli.max_dim)?),
        Command::PropertyN(input) => property_n_cmd(&analyse(input, cli.max_dim)?),
        Command::Theorems(input) => theorems_cmd(&analyse(input, cli.max_dim)?),
        Command::Corpus => corpus_cmd(cli.max_dim),
    }
}

fn load(input: &Input, max_dim: usize) -> anyhow::Result<HopfAlgebraData> {
    let h = match (&input.file, &input.builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_algebra(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        (None, Some(name)) => {
            let b = builtin(name).ok_or_else(|| {
                let names: Vec<&str> = builtins().iter().map(|b| b.name).collect();
                anyhow!("unknown builtin {name:?}; known: {}", names.join(", "))
            })?;
            b.build()?
        }
        (None, None) => bail!("give an algebra file or --builtin NAME"),
    };
    if h.dim() > max_dim {
        return Err(HopfError::TooLarge { dim: h.dim(), limit: max_dim }.into());
    }
    Ok(h)
}

/// Loads, checks the axioms and semisimplicity, and computes both character sets.
fn analyse(input: &Input, max_dim: usize) -> anyhow::Result<CharacterData> {
    let h = load(input, max_dim)?;
    verify_hopf(&h).into_result()?;
    integral(&h)?;
    Ok(CharacterData::new(Arc::new(h))?)
}

fn vector_text(v: &[FieldElem]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn verify_report_text(r: &HopfReport) -> String {
    let mut s = format!("{} (dim {})\n", r.algebra, r.dim);
    for c in &r.checks {
        match &c.witness {
            Some(w) => writeln!(s, "  {:<32} FAIL  witness {:?}", c.axiom, w),
            None => writeln!(s, "  {:<32} pass", c.axiom),
        }
        .unwrap();
    }
    writeln!(s, "  {:<32} {}", "S^2 = id", if r.antipode_involutive { "yes" } else { "no" }).unwrap();
    s
}

fn verify_cmd(h: &HopfAlgebraData) -> anyhow::Result<Outcome> {
    let report = verify_hopf(h);
    let text = verify_report_text(&report);
    if let Some(c) = report.first_failure() {
        eprint!("{text}");
        return Err(HopfError::AxiomViolated(format!(
            "{} (witness {:?})",
            c.axiom,
            c.witness.clone().unwrap_or_default()
        ))
        .into());
    }
    let semisimple = integral(h).map(|_| true).or_else(|e| match e {
        HopfError::NotSemisimple(_) => Ok(false),
        other => Err(other),
    })?;
    let mut text = text;
    writeln!(text, "  {:<32} {}", "semisimple", if semisimple { "yes" } else { "no" }).unwrap();
    Ok(Outcome {
        passed: true,
        json: json!({ "report": report, "semisimple": semisimple }),
        text,
    })
}

fn irr_cmd(data: &CharacterData) -> anyhow::Result<Outcome> {
    let name = data.algebra.name();
    let dual_name = data.dual.name();
    let bound = value_bound_report(&data.irr, &data.coirr);
    let mut text = format!("Irr({name})\n");
    text.push_str(&character_table_text("chi", &data.irr));
    writeln!(text, "\nIrr({dual_name})").unwrap();
    text.push_str(&character_table_text("d", &data.coirr));
    writeln!(
        text,
        "\n|chi(d)| <= eps(d) chi(1): {} over {} pairs (max ratio {:.6})",
        mark(bound.within_bound),
        bound.pairs,
        bound.max_ratio
    )
    .unwrap();
    Ok(Outcome {
        passed: bound.within_bound,
        json: json!({
            "algebra": name,
            "dim": data.dim(),
            "irr": CharacterTable::new(name, &data.irr),
            "coirr": CharacterTable::new(dual_name, &data.coirr),
            "value_bound": bound,
        }),
        text,
    })
}

fn kernel_reports(data: &CharacterData) -> anyhow::Result<Vec<KernelReport>> {
    (0..data.irr.len())
        .map(|i| verify_2_10(data, i).map_err(Into::into))
        .collect()
}

fn kernels_text(name: &str, reports: &[KernelReport]) -> String {
    let mut s = format!("{name}\n  chi deg  dim H_chi  dim S_M  dim HKer  dim H/I_M  normal  checks  ker\n");
    for r in reports {
        writeln!(
            s,
            "  {:>3} {:>3}  {:>9}  {:>7}  {:>8}  {:>9}  {:>6}  {:>6}  {:?}",
            r.character,
            r.degree,
            r.kernel_dim,
            r.sm_dim,
            r.hker_dim,
            r.quotient_dim,
            if r.is_normal { "yes" } else { "no" },
            mark(r.all_pass()),
            r.ker_set
        )
        .unwrap();
    }
    s
}

fn kernels_cmd(data: &CharacterData) -> anyhow::Result<Outcome> {
    let reports = kernel_reports(data)?;
    Ok(Outcome {
        passed: reports.iter().all(KernelReport::all_pass),
        text: kernels_text(data.algebra.name(), &reports),
        json: json!({ "algebra": data.algebra.name(), "dim": data.dim(), "characters": reports }),
    })
}

fn lattice_cmd(data: &CharacterData) -> anyhow::Result<Outcome> {
    let l = enumerate_lattice(data)?;
    let mut text = format!("Hopf subalgebras of {}\n", data.algebra.name());
    for (i, k) in l.subalgebras.iter().enumerate() {
        let partner = match l.dual_correspondence[i] {
            Some(j) => format!("(H//K)* = #{j} (dim {})", l.dual_subalgebras[j].dim()),
            None if l.normal_flags[i] => "(H//K)* not found".to_string(),
            None => String::new(),
        };
        writeln!(text, "  #{i:<3} dim {:>2}  {:<10} {partner}", k.dim(), if l.normal_flags[i] { "normal" } else { "" })
            .unwrap();
    }
    writeln!(text, "Hopf subalgebras of {}", data.dual.name()).unwrap();
    for (j, k) in l.dual_subalgebras.iter().enumerate() {
        writeln!(text, "  #{j:<3} dim {:>2}  {}", k.dim(), if l.dual_normal_flags[j] { "normal" } else { "" }).unwrap();
    }
    writeln!(text, "closed under intersection: {}", mark(l.intersection_closed)).unwrap();
    writeln!(text, "normal correspondence is a bijection: {}", mark(l.correspondence_is_bijection)).unwrap();
    Ok(Outcome {
        passed: l.intersection_closed && l.correspondence_is_bijection,
        json: json!({
            "algebra": data.algebra.name(),
            "dims": l.dims(),
            "normal": l.normal_flags,
            "dual_dims": l.dual_subalgebras.iter().map(|k| k.dim()).collect::<Vec<_>>(),
            "dual_normal": l.dual_normal_flags,
            "dual_correspondence": l.dual_correspondence,
            "intersection_closed": l.intersection_closed,
            "correspondence_is_bijection": l.correspondence_is_bijection,
            "subalgebras": l.subalgebras,
            "dual_subalgebras": l.dual_subalgebras,
        }),
        text,
    })
}

fn central_cmd(data: &CharacterData) -> anyhow::Result<Outcome> {
    let c = central_data(data)?;
    let mut text = format!("{}\n", data.algebra.name());
    writeln!(text, "  dim Z(H*) cap C(H) = {}", c.z_hat_dual.dim()).unwrap();
    writeln!(text, "  dim Z(H) cap C(H*) = {}", c.z_hat.dim()).unwrap();
    writeln!(text, "  classes of Irr(H*): {:?}", c.partition_y).unwrap();
    writeln!(text, "  classes of Irr(H):  {:?}", c.partition_x).unwrap();
    for (j, e) in c.e_hats.iter().enumerate() {
        writeln!(text, "  e_hat[{j}] = {}", vector_text(e)).unwrap();
    }
    for (i, f) in c.f_images.iter().enumerate() {
        writeln!(text, "  phi(f[{i}]) = {}", vector_text(f)).unwrap();
    }
    writeln!(text, "  e_hat formulas agree: {}", mark(c.e_hat_formulas_agree)).unwrap();
    writeln!(text, "  e_j orthogonal idempotents: {}", mark(c.e_idempotents_valid)).unwrap();
    writeln!(text, "  phi(f_i) central idempotents: {}", mark(c.f_images_valid)).unwrap();
    writeln!(text, "  sum of e_hat is dim(H) Lambda: {}", mark(c.e_hat_sum_is_regular)).unwrap();
    Ok(Outcome {
        passed: c.all_pass(),
        json: json!({ "algebra": data.algebra.name(), "central": c }),
        text,
    })
}

fn property_n_cmd(data: &CharacterData) -> anyhow::Result<Outcome> {
    let p = property_n(data)?;
    let q = property_n(&data.dualized())?;
    let agree = p.holds == q.holds;
    let mut text = String::new();
    for (name, r) in [(data.algebra.name(), &p), (data.dual.name(), &q)] {
        writeln!(
            text,
            "{name}: property (N) {}  kernel dims {:?}  non-normal {:?}",
            if r.holds { "holds" } else { "fails" },
            r.kernel_dims,
            r.non_normal
        )
        .unwrap();
    }
    writeln!(text, "same answer for H and H*: {}", mark(agree)).unwrap();
    Ok(Outcome {
        passed: agree,
        json: json!({ "algebra": data.algebra.name(), "property_n": p, "dual_property_n": q, "agree": agree }),
        text,
    })
}

fn theorems_cmd(data: &CharacterData) -> anyhow::Result<Outcome> {
    let r = theorem_harness(data)?;
    let mut text = format!("{} (dim {})\n", r.algebra, r.dim);
    for f in &r.findings {
        writeln!(text, "  {:<46} {}", f.id, mark(f.passed)).unwrap();
    }
    Ok(Outcome {
        passed: r.all_pass(),
        json: serde_json::to_value(&r)?,
        text,
    })
}

/// Everything for one built-in; errors become a failed entry rather than aborting the run.
fn corpus_entry(b: &Builtin) -> (bool, Value, String) {
    let run = || -> anyhow::Result<(bool, Value, String)> {
        let h = b.build()?;
        let axioms = verify_hopf(&h).into_result()?;
        let data = CharacterData::new(Arc::new(h))?;
        let mut degrees = data.irr.degrees();
        degrees.sort_unstable();
        let degrees_ok = degrees == b.expected_degrees;
        let kernels = kernel_reports(&data)?;
        let kernels_ok = kernels.iter().all(KernelReport::all_pass);
        let theorems = theorem_harness(&data)?;
        let passed = degrees_ok && kernels_ok && theorems.all_pass();
        let line = format!(
            "{:<12} dim {:>2}  degrees {}  kernels {}  theorems {}  (N) {}",
            b.name,
            data.dim(),
            mark(degrees_ok),
            mark(kernels_ok),
            mark(theorems.all_pass()),
            theorems.property_n.holds
        );
        let doc = json!({
            "name": b.name,
            "dim": data.dim(),
            "cyclotomic_order": b.cyclotomic_order,
            "passed": passed,
            "axioms": axioms,
            "degrees": degrees,
            "degrees_match": degrees_ok,
            "kernels": kernels,
            "theorems": theorems,
        });
        Ok((passed, doc, line))
    };
    run().unwrap_or_else(|err| {
        let line = format!("{:<12} error: {err:#}", b.name);
        (false, json!({ "name": b.name, "passed": false, "error": format!("{err:#}") }), line)
    })
}

fn corpus_cmd(max_dim: usize) -> anyhow::Result<Outcome> {
    let all = builtins();
    let (run, skipped): (Vec<Builtin>, Vec<Builtin>) = all.into_iter().partition(|b| {
        let dim: u32 = b.expected_degrees.iter().map(|d| d * d).sum();
        dim as usize <= max_dim
    });
    let results: Vec<(bool, Value, String)> = std::thread::scope(|s| {
        let handles: Vec<_> = run.iter().map(|b| s.spawn(move || corpus_entry(b))).collect();
        handles.into_iter().map(|h| h.join().expect("corpus worker panicked")).collect()
    });
    let passed = results.iter().all(|r| r.0);
    let mut text = String::new();
    for (_, _, line) in &results {
        writeln!(text, "{line}").unwrap();
    }
    for b in &skipped {
        writeln!(text, "{:<12} skipped (over --max-dim {max_dim})", b.name).unwrap();
    }
    writeln!(
        text,
        "{} of {} algebras pass",
        results.iter().filter(|r| r.0).count(),
        results.len()
    )
    .unwrap();
    Ok(Outcome {
        passed,
        json: json!({
            "passed": passed,
            "algebras": results.into_iter().map(|r| r.1).collect::<Vec<_>>(),
            "skipped": skipped.iter().map(|b| b.name).collect::<Vec<_>>(),
        }),
        text,
    })
}
