//! `delannoy`: enumeration, composition, ring arithmetic and verification
//! from the command line.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};

use delannoy::category::{compose, projector, trace, Morphism};
use delannoy::combinatorics::{delannoy_number, enumerate_paths, Path, Weight};
use delannoy::euler::cell_count;
use delannoy::kring::{
    adams, antipode, hilbert_value, induce, power_class, restrict, schur_apply, tensor_mul, KClass, KTensorClass,
    Partition,
};
use delannoy::scalar::{self, sign};
use delannoy::verify::{run_all, run_suite, VerificationReport, SUITES};

use output::{Format, Output};

/// Refuse to list more paths than this.
const MAX_LISTED: usize = 200_000;

#[derive(Parser)]
#[command(name = "delannoy", version, about = "Delannoy paths, their category and its Grothendieck ring")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Number of Delannoy paths from (0,0) to (n,m).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// List the Delannoy paths to (n,m) in lexicographic order.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Composition table of basis paths Γ(n,m) × Γ(m,l).
    Compose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Defaults to n.
        #[arg(long)]
        l: Option<usize>,
    },
    /// The idempotent π_λ as a combination of paths.
    Projector {
        #[arg(long, value_parser = parse_weight)]
        word: Weight,
    },
    /// Categorical trace of π_λ.
    Trace {
        #[arg(long, value_parser = parse_weight)]
        word: Weight,
    },
    /// Arithmetic in the Grothendieck ring.
    Ring {
        #[command(subcommand)]
        op: RingOp,
    },
    /// Multiplicity table of C(R^(n)).
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite, or all of them.
    Verify {
        /// One of the suite names, or `all`.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Export paths, cells, multiplicities and projectors for (n,m).
    Export {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Classes are given as a word over b/w (a basis element) or as
/// comma-separated `word:coeff` terms, e.g. `bw:2, :-1`.
#[derive(Subcommand)]
enum RingOp {
    /// Product x·y.
    Mul {
        #[arg(long, value_parser = parse_class)]
        x: KClass,
        #[arg(long, value_parser = parse_class)]
        y: KClass,
    },
    /// Restriction res(x) in K ⊗ K.
    Res {
        #[arg(long, alias = "word", value_parser = parse_class)]
        x: KClass,
    },
    /// Induction ind(x ⊗ y).
    Ind {
        #[arg(long, value_parser = parse_class)]
        x: KClass,
        #[arg(long, value_parser = parse_class)]
        y: KClass,
    },
    /// Antipode S(x).
    Antipode {
        #[arg(long, alias = "word", value_parser = parse_class)]
        x: KClass,
    },
    /// Adams operation ψ^n(x).
    Adams {
        #[arg(long, alias = "word", value_parser = parse_class)]
        x: KClass,
        #[arg(long)]
        n: usize,
    },
    /// Schur functor s_λ(x).
    Schur {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, alias = "word", value_parser = parse_class)]
        x: KClass,
    },
    /// Hilbert function values h_x(0), ..., h_x(n).
    Hilbert {
        #[arg(long, alias = "word", value_parser = parse_class)]
        x: KClass,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse().map_err(|e: delannoy::Error| e.to_string())
}

fn parse_class(s: &str) -> Result<KClass, String> {
    if s.contains(':') {
        KClass::parse_terms(s).map_err(|e| e.to_string())
    } else {
        parse_weight(s).map(KClass::basis)
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: delannoy::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok(code) => code,
        Err(msg) => {
            let mut cmd = Cli::command();
            cmd.error(clap::error::ErrorKind::ValueValidation, msg).exit()
        }
    }
}

fn run(command: Command, format: Format) -> Result<ExitCode, String> {
    let out = match command {
        Command::Count { n, m } => count(n, m),
        Command::Paths { n, m } => paths(n, m)?,
        Command::Compose { n, m, l } => compose_table(n, m, l.unwrap_or(n))?,
        Command::Projector { word } => projector_out(&word),
        Command::Trace { word } => trace_out(&word)?,
        Command::Ring { op } => ring(op),
        Command::Decompose { n } => decompose(n),
        Command::Verify { suite, seed } => return verify(&suite, seed, format),
        Command::Export { n, m, out } => return export(n, m, out, format),
    };
    out.emit(format);
    Ok(ExitCode::SUCCESS)
}

fn count(n: usize, m: usize) -> Output {
    let d = delannoy_number(n, m);
    let json = match u64::try_from(&d) {
        Ok(v) => json!({ "count": v }),
        Err(_) => json!({ "count": d.to_string() }),
    };
    Output { json, header: vec!["n", "m", "count"], rows: vec![vec![n.to_string(), m.to_string(), d.to_string()]], pretty: format!("D({n},{m}) = {d}") }
}

fn checked_paths(target: &[usize]) -> Result<Vec<Path>, String> {
    let d = delannoy_number(target[0], target[1]);
    if d > MAX_LISTED.into() {
        return Err(format!("Γ({},{}) has {d} paths; refusing to list more than {MAX_LISTED}", target[0], target[1]));
    }
    Ok(enumerate_paths(target))
}

fn paths(n: usize, m: usize) -> Result<Output, String> {
    let ps = checked_paths(&[n, m])?;
    let rows = ps.iter().enumerate().map(|(i, p)| vec![i.to_string(), p.len().to_string(), p.to_string()]).collect();
    let pretty = ps.iter().map(|p| format!("{} (length {})", p, p.len())).collect::<Vec<_>>().join("\n");
    Ok(Output {
        json: json!({ "n": n, "m": m, "count": ps.len(), "paths": ps }),
        header: vec!["index", "length", "path"],
        rows,
        pretty: format!("{} paths to ({n},{m})\n{pretty}", ps.len()),
    })
}

fn compose_table(n: usize, m: usize, l: usize) -> Result<Output, String> {
    let left = checked_paths(&[n, m])?;
    let right = checked_paths(&[m, l])?;
    if left.len() * right.len() > MAX_LISTED {
        return Err(format!("table would have {} entries; refusing", left.len() * right.len()));
    }
    let (mut entries, mut rows, mut pretty) = (Vec::new(), Vec::new(), Vec::new());
    for p in &left {
        for q in &right {
            let r = compose(&basis(p), &basis(q)).map_err(|e| e.to_string())?;
            for (path, c) in r.terms() {
                rows.push(vec![p.to_string(), q.to_string(), path.to_string(), scalar::format(c)]);
            }
            pretty.push(format!("{p} ∘ {q} = {r}"));
            entries.push(json!({ "left": p, "right": q, "result": r }));
        }
    }
    Ok(Output {
        json: json!({ "n": n, "m": m, "l": l, "table": entries }),
        header: vec!["left", "right", "path", "coeff"],
        rows,
        pretty: pretty.join("\n"),
    })
}

fn basis(p: &Path) -> Morphism {
    Morphism::basis(p).expect("enumerated paths are planar")
}

fn morphism_rows(f: &Morphism) -> Vec<Vec<String>> {
    f.terms().map(|(p, c)| vec![p.to_string(), scalar::format(c)]).collect()
}

fn projector_out(word: &Weight) -> Output {
    let p = projector(word);
    Output {
        json: json!({ "word": word, "projector": p }),
        header: vec!["path", "coeff"],
        rows: morphism_rows(&p),
        pretty: format!("π_{} = {}", word.symbols(), p),
    }
}

fn trace_out(word: &Weight) -> Result<Output, String> {
    let t = trace(&projector(word)).map_err(|e| e.to_string())?;
    Ok(Output {
        json: json!({ "word": word, "trace": scalar::format(&t) }),
        header: vec!["word", "trace"],
        rows: vec![vec![word.to_string(), scalar::format(&t)]],
        pretty: format!("tr(π_{}) = {}", word.symbols(), scalar::pretty(&t)),
    })
}

fn class_out(label: String, x: &KClass) -> Output {
    Output {
        json: serde_json::to_value(x).expect("classes serialize"),
        header: vec!["word", "coeff"],
        rows: x.terms().map(|(w, c)| vec![w.to_string(), scalar::format(c)]).collect(),
        pretty: format!("{label} = {x}"),
    }
}

fn tensor_out(label: String, t: &KTensorClass) -> Output {
    Output {
        json: serde_json::to_value(t).expect("classes serialize"),
        header: vec!["left", "right", "coeff"],
        rows: t.terms().map(|(l, r, c)| vec![l.to_string(), r.to_string(), scalar::format(c)]).collect(),
        pretty: format!("{label} = {}", if t.terms().next().is_none() { "0".into() } else { t.to_string() }),
    }
}

fn ring(op: RingOp) -> Output {
    match op {
        RingOp::Mul { x, y } => class_out(format!("({x})·({y})"), &tensor_mul(&x, &y)),
        RingOp::Res { x } => tensor_out(format!("res({x})"), &restrict(&x)),
        RingOp::Ind { x, y } => class_out(format!("ind(({x}) ⊗ ({y}))"), &induce(&KTensorClass::outer(&x, &y))),
        RingOp::Antipode { x } => class_out(format!("S({x})"), &antipode(&x)),
        RingOp::Adams { x, n } => class_out(format!("ψ^{n}({x})"), &adams(&x, n)),
        RingOp::Schur { lambda, x } => class_out(format!("s_{lambda}({x})"), &schur_apply(&lambda, &x)),
        RingOp::Hilbert { x, n } => {
            let values: Vec<_> = (0..=n).map(|k| hilbert_value(&x, k)).collect();
            Output {
                json: json!({ "values": values.iter().map(scalar::format).collect::<Vec<_>>() }),
                header: vec!["n", "value"],
                rows: values.iter().enumerate().map(|(k, v)| vec![k.to_string(), scalar::format(v)]).collect(),
                pretty: values.iter().enumerate().map(|(k, v)| format!("h({k}) = {}", scalar::pretty(v))).collect::<Vec<_>>().join("\n"),
            }
        }
    }
}

fn decompose(n: usize) -> Output {
    let c = power_class(n);
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut pretty = vec![format!("C(R^({n})):")];
    let mut length = scalar::int(0);
    for (w, mult) in c.terms() {
        let dim = sign(w.len());
        length += mult;
        rows.push(vec![w.to_string(), scalar::format(mult), scalar::format(&dim)]);
        entries.push(json!({ "word": w, "multiplicity": scalar::format(mult), "dimension": scalar::format(&dim) }));
        pretty.push(format!("  L_{:<8} multiplicity {:>6}  dimension {:>2}", w.symbols(), scalar::pretty(mult), scalar::pretty(&dim)));
    }
    pretty.push(format!("length {}", scalar::pretty(&length)));
    Output {
        json: json!({ "n": n, "length": scalar::format(&length), "simples": entries }),
        header: vec!["word", "multiplicity", "dimension"],
        rows,
        pretty: pretty.join("\n"),
    }
}

fn verify(suite: &str, seed: u64, format: Format) -> Result<ExitCode, String> {
    let reports: Vec<VerificationReport> = if suite == "all" {
        run_all(seed)
    } else {
        vec![run_suite(suite, seed).ok_or_else(|| format!("unknown suite '{suite}'; expected one of: all, {}", SUITES.join(", ")))?]
    };
    let passed = reports.iter().all(|r| r.passed);
    let mut rows = Vec::new();
    let mut pretty = Vec::new();
    for r in &reports {
        pretty.push(format!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.suite));
        for c in &r.checks {
            rows.push(vec![r.suite.clone(), c.name.clone(), c.passed.to_string(), c.detail.clone()]);
            if !c.passed {
                pretty.push(format!("  failed: {}: {}", c.name, c.detail));
            }
        }
    }
    let out = Output {
        json: json!({ "seed": seed, "passed": passed, "suites": reports }),
        header: vec!["suite", "check", "passed", "detail"],
        rows,
        pretty: pretty.join("\n"),
    };
    out.emit(format);
    if passed {
        Ok(ExitCode::SUCCESS)
    } else {
        for r in &reports {
            for c in r.failures() {
                eprintln!("failed check: {} / {}", r.suite, c.name);
            }
        }
        Ok(ExitCode::from(1))
    }
}

fn export(n: usize, m: usize, out: Option<PathBuf>, format: Format) -> Result<ExitCode, String> {
    let ps = checked_paths(&[n, m])?;
    let decomposition = decompose(n);
    let projectors: Vec<Value> = Weight::all_of_length(n.min(m))
        .iter()
        .map(|w| json!({ "word": w, "projector": projector(w) }))
        .collect();
    let cells = cell_count(n, m);
    let bundle = Output {
        json: json!({
            "n": n,
            "m": m,
            "count": ps.len(),
            "cell_count": cells.to_string(),
            "paths": ps,
            "decomposition": decomposition.json,
            "projectors": projectors,
        }),
        header: decomposition.header.clone(),
        rows: decomposition.rows.clone(),
        pretty: format!(
            "D({n},{m}) = {}\ncells of R^{n} cut by {m} points: {cells}\n{}",
            ps.len(),
            decomposition.pretty
        ),
    };
    match out {
        Some(file) => {
            std::fs::write(&file, bundle.render(format)).map_err(|e| format!("cannot write {}: {e}", file.display()))?;
            println!("wrote {}", file.display());
        }
        None => bundle.emit(format),
    }
    Ok(ExitCode::SUCCESS)
}
