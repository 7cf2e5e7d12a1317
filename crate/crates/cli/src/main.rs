//! `apolar`: command-line access to the apolar-core computations.
//!
//! Exit status is 0 on success, 2 when a verification or table comparison
//! fails, and 1 on usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde_json::{json, Value};

use apolar_core::apolar::{check_triangularity, DetOrPerm};
use apolar_core::combinatorics::{catalan, dyck_corner_counts, enumerate_doset_minors, narayana, NarayanaConvention};
use apolar_core::groebner::is_groebner;
use apolar_core::invariants::{build_generator_set, Form, GeneratorKind, SpaceKind};
use apolar_core::ranks::rank_report;
use apolar_core::report::{form_report, ReportOptions};
use apolar_core::symgroup::{check_phi_equivariance, decompose, monomial_space_character, phi_psi_maps};
use apolar_core::tables::{emit_table, TABLE_IDS};
use apolar_core::{Layout, MonomialOrder, Pairing, RingSpec};

const DEFAULT_CAP: usize = 6;
const EXTENDED_CAP: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "apolar", version, about = "Apolar ideals of determinants, permanents, hafnians and immanants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Allow n = 7 for annihilator computations.
    #[arg(long, global = true)]
    extended: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert sequence, length and optional generator profile.
    Hilbert(FormArgs),
    /// Print one of the explicit generator sets as JSON.
    Generators {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
    },
    /// Check that a generator set generates the apolar ideal degree by degree.
    Verify {
        #[command(flatten)]
        form: FormArgs,
        /// V, W, Hdeg3, WPlus or AnnCo2 (default: V for det, WPlus for perm).
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Buchberger criterion for a generator set.
    GroebnerCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "V")]
        set: String,
        #[arg(long, value_enum, default_value_t = Order::Conca)]
        order: Order,
        #[arg(long)]
        degree_cap: Option<u32>,
    },
    /// Rank lower bounds.
    Ranks(FormArgs),
    /// Characters of the symmetric group on the hafnian monomials.
    Character {
        #[arg(long, value_enum, default_value_t = Space::Monhaf)]
        space: Space,
        #[arg(long)]
        n: usize,
        /// Also report the kernel and image of h -> h.perm and h -> h.det.
        #[arg(long)]
        maps: bool,
        /// Random samples for the equivariance check of h -> h.perm.
        #[arg(long, default_value_t = 0)]
        equivariance: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Catalan, Narayana, doset and Dyck counts.
    Combinatorics {
        #[arg(long)]
        n: usize,
    },
    /// Leading-monomial coverage of the ideal slices in degree k.
    Triangularity {
        #[arg(long, value_enum)]
        form: TriForm,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
    /// Regenerate a published table (all of them without --id).
    Tables {
        #[arg(long)]
        id: Option<u32>,
    },
}

#[derive(Args, Debug)]
struct FormArgs {
    #[arg(long)]
    n: usize,
    /// det, perm, hafnian or imm:<partition> (e.g. imm:2,1).
    #[arg(long, default_value = "det")]
    form: String,
    #[arg(long, value_enum, default_value_t = LayoutArg::Sym)]
    layout: LayoutArg,
    #[arg(long, value_enum, default_value_t = PairingArg::Diff)]
    pairing: PairingArg,
    /// Count minimal generators up to this degree.
    #[arg(long)]
    profile: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Output {
    Json,
    Md,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LayoutArg {
    Sym,
    Generic,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PairingArg {
    Diff,
    Contract,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Order {
    Conca,
    Revconca,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Space {
    Monhaf,
    Irreducibles,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TriForm {
    Det,
    Perm,
}

impl From<LayoutArg> for Layout {
    fn from(l: LayoutArg) -> Layout {
        match l {
            LayoutArg::Sym => Layout::Symmetric,
            LayoutArg::Generic => Layout::Generic,
        }
    }
}

impl From<PairingArg> for Pairing {
    fn from(p: PairingArg) -> Pairing {
        match p {
            PairingArg::Diff => Pairing::Diff,
            PairingArg::Contract => Pairing::Contract,
        }
    }
}

impl From<Order> for MonomialOrder {
    fn from(o: Order) -> MonomialOrder {
        match o {
            Order::Conca => MonomialOrder::ConcaLex,
            Order::Revconca => MonomialOrder::ReverseConcaLex,
        }
    }
}

/// A finished run: the rendered report and whether its checks passed.
struct Outcome {
    body: String,
    ok: bool,
}

fn check_size(n: usize, extended: bool) -> Result<()> {
    let cap = if extended { EXTENDED_CAP } else { DEFAULT_CAP };
    if n == 0 {
        bail!("n must be at least 1");
    }
    if n > cap {
        if extended {
            bail!("n = {} is beyond the supported size (n <= {})", n, cap);
        }
        bail!("n = {} is beyond the default size cap (n <= {}); pass --extended for n = {}", n, cap, EXTENDED_CAP);
    }
    Ok(())
}

fn markdown(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{}- **{}**:\n", pad, k));
                        markdown(x, depth + 1, out);
                    }
                    _ => out.push_str(&format!("{}- **{}**: {}\n", pad, k, inline(x))),
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_flat(x) {
                    out.push_str(&format!("{}- {}\n", pad, inline(x)));
                } else {
                    out.push_str(&format!("{}-\n", pad));
                    markdown(x, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad, inline(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(inline).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn render(v: &Value, output: Output, title: &str) -> String {
    match output {
        Output::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Output::Md => {
            let mut s = format!("## {}\n\n", title);
            markdown(v, 0, &mut s);
            s
        }
    }
}

fn parse_form(s: &str) -> Result<Form> {
    s.parse::<Form>().map_err(|e| anyhow::anyhow!("{}", e))
}

fn parse_set(s: &str) -> Result<GeneratorKind> {
    s.parse::<GeneratorKind>().map_err(|e| anyhow::anyhow!("{}", e))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let out = cli.output;
    match &cli.command {
        Command::Hilbert(a) => {
            check_size(a.n, cli.extended)?;
            let form = parse_form(&a.form)?;
            let opts = ReportOptions { profile_up_to: a.profile, ..Default::default() };
            let r = form_report(&form, a.n, a.layout.into(), a.pairing.into(), &opts)?;
            let v = serde_json::to_value(&r)?;
            Ok(Outcome { body: render(&v, out, &format!("{} n={}", form, a.n)), ok: true })
        }
        Command::Generators { n, set } => {
            if *n < 2 || *n > 12 {
                bail!("generator sets are built for 2 <= n <= 12");
            }
            let g = build_generator_set(parse_set(set)?, *n)?;
            let v = serde_json::to_value(g.to_json())?;
            Ok(Outcome { body: render(&v, out, &format!("generators {} n={}", set, n)), ok: true })
        }
        Command::Verify { form: a, set, max_degree } => {
            check_size(a.n, cli.extended)?;
            let form = parse_form(&a.form)?;
            let kind = match (set, &form) {
                (Some(s), _) => parse_set(s)?,
                (None, Form::Det) => GeneratorKind::V,
                (None, Form::Perm) => GeneratorKind::WPlus,
                (None, _) => bail!("--set is required for {}", form),
            };
            let opts = ReportOptions {
                profile_up_to: a.profile,
                verify: Some(kind),
                verify_max_degree: *max_degree,
            };
            let r = form_report(&form, a.n, a.layout.into(), a.pairing.into(), &opts)?;
            let ok = r.verification.as_ref().is_some_and(|v| v.passed);
            let v = serde_json::to_value(&r)?;
            Ok(Outcome { body: render(&v, out, &format!("verify {:?} for {} n={}", kind, form, a.n)), ok })
        }
        Command::GroebnerCheck { n, set, order, degree_cap } => {
            check_size(*n, cli.extended)?;
            let g = build_generator_set(parse_set(set)?, *n)?;
            let rep = is_groebner(&g.members, (*order).into(), *degree_cap)?;
            let ok = rep.passed();
            let mut v = serde_json::to_value(&rep)?;
            v["passed"] = json!(ok);
            Ok(Outcome { body: render(&v, out, &format!("groebner-check {} n={}", set, n)), ok })
        }
        Command::Ranks(a) => {
            check_size(a.n, cli.extended)?;
            if !matches!(a.layout, LayoutArg::Sym) {
                bail!("rank bounds are reported for the symmetric layout only");
            }
            let form = parse_form(&a.form)?;
            let r = rank_report(&form, a.n, a.pairing.into())?;
            let v = serde_json::to_value(&r)?;
            Ok(Outcome { body: render(&v, out, &format!("ranks {} n={}", form, a.n)), ok: true })
        }
        Command::Character { space, n, maps, equivariance, seed } => {
            if *n == 0 || *n > 8 {
                bail!("characters are supported for 1 <= n <= 8");
            }
            let v = match space {
                Space::Irreducibles => serde_json::to_value(apolar_core::symgroup::character_table(*n))?,
                Space::Monhaf => {
                    if n % 2 != 0 {
                        bail!("the hafnian needs even n");
                    }
                    let ring = RingSpec::symmetric(*n)?;
                    let sp = apolar_core::invariants::monomial_space(SpaceKind::MonHaf, &ring, n / 2)?;
                    let chi = monomial_space_character(&sp)?;
                    let dec: serde_json::Map<String, Value> =
                        decompose(&chi)?.into_iter().map(|(p, m)| (p.to_string(), json!(m))).collect();
                    let mut v = json!({
                        "classes": chi.classes.iter().map(|c| c.label()).collect::<Vec<_>>(),
                        "class_sizes": chi.classes.iter().map(|c| c.size).collect::<Vec<_>>(),
                        "chi": chi.values,
                        "norm2": apolar_core::ring::fmt_rational(&chi.norm2()),
                        "decomposition": dec,
                    });
                    if *maps && *n <= 6 {
                        v["maps"] = serde_json::to_value(phi_psi_maps(*n)?)?;
                    } else if *maps {
                        bail!("--maps is supported for n <= 6");
                    }
                    if *equivariance > 0 {
                        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
                        let failures = check_phi_equivariance(*n, *equivariance, &mut rng)?;
                        v["equivariance"] = json!({"samples": equivariance, "failures": failures});
                    }
                    v
                }
            };
            let ok = v.get("equivariance").is_none_or(|e| e["failures"] == json!(0));
            Ok(Outcome { body: render(&v, out, &format!("character n={}", n)), ok })
        }
        Command::Combinatorics { n } => {
            if *n == 0 || *n > 12 {
                bail!("combinatorics is supported for 1 <= n <= 12");
            }
            let nn = *n as u64;
            let table: Vec<String> =
                (1..=nn).map(|t| narayana(nn, t, NarayanaConvention::Table).map(|x| x.to_string())).collect::<Result<_, _>>()?;
            let standard: Vec<String> = (1..=nn + 1)
                .map(|t| narayana(nn + 1, t, NarayanaConvention::Standard).map(|x| x.to_string()))
                .collect::<Result<_, _>>()?;
            let doset: Vec<usize> = (1..=*n).map(|t| enumerate_doset_minors(*n, t).len()).collect();
            let v = json!({
                "n": n,
                "catalan_n_plus_1": catalan(nn + 1).to_string(),
                "minor_span_dims": table,
                "narayana_n_plus_1": standard,
                "doset_minor_counts": doset,
                "dyck_corner_counts_order_n_plus_1": if *n <= 10 { json!(dyck_corner_counts(*n + 1)) } else { Value::Null },
            });
            Ok(Outcome { body: render(&v, out, &format!("combinatorics n={}", n)), ok: true })
        }
        Command::Triangularity { form, n, k } => {
            check_size(*n, cli.extended)?;
            if *k < 2 || *k as usize > *n {
                bail!("k must satisfy 2 <= k <= n");
            }
            let f = match form {
                TriForm::Det => DetOrPerm::Det,
                TriForm::Perm => DetOrPerm::Perm,
            };
            let r = check_triangularity(f, *n, *k)?;
            let ok = r.passed;
            let v = serde_json::to_value(&r)?;
            Ok(Outcome { body: render(&v, out, &format!("triangularity n={} k={}", n, k)), ok })
        }
        Command::Tables { id } => {
            let ids: Vec<u32> = match id {
                Some(i) if TABLE_IDS.contains(i) => vec![*i],
                Some(i) => bail!("no table {}; valid ids are 1-10", i),
                None => TABLE_IDS.to_vec(),
            };
            let mut ok = true;
            let mut md = String::new();
            let mut js = Vec::new();
            for i in ids {
                let t = emit_table(i, cli.extended)?;
                let mism = t.mismatches();
                ok &= mism.is_empty();
                md.push_str(&t.to_markdown());
                md.push('\n');
                let mut v = serde_json::to_value(&t)?;
                v["mismatches"] = serde_json::to_value(&mism)?;
                js.push(v);
            }
            let body = match out {
                Output::Md => md,
                Output::Json => {
                    let v = if js.len() == 1 { js.pop().expect("one table") } else { Value::Array(js) };
                    serde_json::to_string_pretty(&v)? + "\n"
                }
            };
            Ok(Outcome { body, ok })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("warning: could not set thread count: {}", e);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {:#}", e);
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.body).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(outcome.body.as_bytes()).context("writing stdout"),
    };
    if let Err(e) = written {
        eprintln!("error: {:#}", e);
        return ExitCode::from(1);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
