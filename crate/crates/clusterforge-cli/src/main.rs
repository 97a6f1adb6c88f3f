//! `clusterforge` command-line front end. Builds words, snake graphs,
//! expansion posets and SL3 diagrams and prints them as JSON, DOT or text.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on usage
//! errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use clusterforge::cluster_engine::{cluster_variable, default_names, ptolemy_chord_oracle};
use clusterforge::core::{Letter, Word};
use clusterforge::expansions::{
    enumerate_l, expansion, expansion_sum, is_ideal_lattice_of, iso_witness, own_expansion, ExpansionKind,
};
use clusterforge::par;
use clusterforge::poset::{fence, order_ideals, FinitePoset};
use clusterforge::rank_analysis::{rank_fibonacci, rank_hook, rank_recursive, rank_report};
use clusterforge::sl3::{
    build_fan_sl3_seed, enumerate_edge_tpaths, enumerate_face_tpaths, expansion_of as sl3_sum, sl3_poset,
    verify_fork_join, Target,
};
use clusterforge::snakegraph::{orbit_poset, SnakeGraph};
use clusterforge::triangulation::LabeledTriangulation;

#[derive(Parser, Debug)]
#[command(name = "clusterforge", version, about = "Snake graphs, triangulations and cluster expansions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Cap on worker threads for sweeps.
    #[arg(long, global = true, env = "CLUSTERFORGE_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    P,
    A,
    T,
    L,
    B,
    S,
}

impl From<Kind> for ExpansionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::P => ExpansionKind::P,
            Kind::A => ExpansionKind::A,
            Kind::T => ExpansionKind::T,
            Kind::L => ExpansionKind::L,
            Kind::B => ExpansionKind::B,
            Kind::S => ExpansionKind::S,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Sl3Kind {
    Edge,
    Face,
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse::<Word>().map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
struct WordArg {
    /// Word over {a, b}.
    #[arg(long, value_parser = parse_word)]
    word: Word,
}

#[derive(Args, Debug)]
struct ShapeArg {
    /// Snake graph shape over {a, b} (a glues right, b glues up).
    #[arg(long, value_parser = parse_word)]
    shape: Word,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One of the six expansion posets of x_w with its weight sum.
    Expand {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_enum, ignore_case = true, default_value_t = Kind::P)]
        kind: Kind,
    },
    /// The dual word and the continued fractions on both sides.
    Dual {
        #[command(flatten)]
        word: WordArg,
    },
    /// Rank generating function of the lattice paths of a shape.
    Rank {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Continued fraction of a word and its value.
    Cf {
        #[command(flatten)]
        word: WordArg,
    },
    /// Orbit poset of shapes with the same tile and `b` counts as the shape.
    Orbit {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Snake graph of a word, or of a shape when `--shape` is given.
    Snake {
        #[arg(long, value_parser = parse_word, conflicts_with = "shape", required_unless_present = "shape")]
        word: Option<Word>,
        #[arg(long, value_parser = parse_word)]
        shape: Option<Word>,
    },
    /// Fence poset of a word and its lattice of order ideals.
    Poset {
        #[command(flatten)]
        word: WordArg,
    },
    /// SL3 T-paths of the longest edge or the fan face of a polygon.
    Sl3 {
        /// Number of polygon vertices (at least 4).
        #[arg(long, value_parser = clap::value_parser!(u32).range(4..=12))]
        size: u32,
        #[arg(long, value_enum, default_value_t = Sl3Kind::Edge)]
        kind: Sl3Kind,
    },
    /// Cross-check every expansion, duality and rank formula against the
    /// oracles, for one word or for all words up to a length.
    Verify {
        #[arg(long, value_parser = parse_word, conflicts_with = "sweep", required_unless_present = "sweep")]
        word: Option<Word>,
        /// Check every word of length at most N.
        #[arg(long)]
        sweep: Option<usize>,
    },
}

/// Rendered output in every format a command supports.
struct Rendered {
    json: Value,
    dot: Option<String>,
    text: String,
}

fn poset_render(p: &FinitePoset, mut json: Value, text: String) -> Rendered {
    json["poset"] = p.to_json();
    Rendered { json, dot: Some(p.to_dot()), text }
}

fn run_expand(w: &Word, kind: Kind) -> Rendered {
    let k: ExpansionKind = kind.into();
    let p = expansion(w, k);
    let sum = expansion_sum(&p, k, w.len() + 1);
    let names = default_names(sum.nvars());
    let mut text = format!("{k}_{w}: {} elements\n", p.len());
    for i in 0..p.len() {
        text.push_str(&format!("  {}\n", p.payload(i)));
    }
    text.push_str(&format!("sum = {}\n", sum.display_with(&names)));
    poset_render(&p, json!({"word": w.to_string(), "kind": k.to_string(), "sum": sum.to_json(&names)}), text)
}

fn run_dual(w: &Word) -> Rendered {
    let d = w.dual();
    let cf = SnakeGraph::from_word(w).continued_fraction();
    let dcf = SnakeGraph::from_word(&d).continued_fraction();
    let json = json!({
        "word": w.to_string(),
        "dual": d.to_string(),
        "cf": cf.entries(),
        "dual_cf": dcf.entries(),
        "cf_dual": cf.dual().entries(),
    });
    let text = format!("{w}* = {d}\nCF({w}) = {cf}\nCF({d}) = {dcf}\n");
    Rendered { json, dot: None, text }
}

fn run_rank(s: &Word) -> Rendered {
    let json = rank_report(s);
    let text = format!("{}\n", rank_recursive(&SnakeGraph::of_shape(s)));
    Rendered { json, dot: None, text }
}

fn run_cf(w: &Word) -> Rendered {
    let cf = SnakeGraph::from_word(w).continued_fraction();
    let v = cf.value();
    let json = json!({
        "word": w.to_string(),
        "cf": cf.entries(),
        "numerator": v.numer().to_string(),
        "denominator": v.denom().to_string(),
        "dual": cf.dual().entries(),
    });
    Rendered { json, dot: None, text: format!("{cf} = {v}\n") }
}

fn run_orbit(s: &Word) -> Rendered {
    let n = s.len() + 1;
    let j = s.count(Letter::B);
    let p = orbit_poset(n, j);
    let rank = p.rank_generating_function().map(|r| r.to_string()).unwrap_or_default();
    let text = format!("O^{n}_{j}: {} shapes, rank {rank}\n", p.len());
    poset_render(&p, json!({"tiles": n, "b_count": j, "rank": rank}), text)
}

fn run_snake(word: Option<&Word>, shape: Option<&Word>) -> Rendered {
    let g = match (word, shape) {
        (Some(w), _) => SnakeGraph::from_word(w),
        (None, Some(s)) => SnakeGraph::of_shape(s),
        (None, None) => unreachable!("clap requires one of --word or --shape"),
    };
    let text = format!("shape {} with {} tiles, CF {}\n", g.shape(), g.num_tiles(), g.continued_fraction());
    Rendered { json: g.to_json(), dot: None, text }
}

fn run_poset(w: &Word) -> Result<Rendered, String> {
    let c = fence(w);
    let ideals = order_ideals(&c).map_err(|e| e.to_string())?;
    let json = json!({"word": w.to_string(), "fence": c.to_json(), "ideals": ideals.to_json()});
    let text = format!("fence of {w}: {} elements, {} ideals\n", c.len(), ideals.len());
    Ok(Rendered { json, dot: Some(ideals.to_dot()), text })
}

fn run_sl3(size: usize, kind: Sl3Kind) -> Result<Rendered, String> {
    let seed = build_fan_sl3_seed(size).map_err(|e| e.to_string())?;
    let (target, ds) = match kind {
        Sl3Kind::Edge => (Target::Edge(1, size - 1), enumerate_edge_tpaths(&seed, 1, size - 1)),
        Sl3Kind::Face => (Target::Face([0, 1, size - 1]), enumerate_face_tpaths(&seed, 0, 1, size - 1)),
    };
    let ds = ds.map_err(|e| e.to_string())?;
    let p = sl3_poset(&seed, &ds).map_err(|e| e.to_string())?;
    let names = seed.variable_names();
    let sum = sl3_sum(&seed, &ds);
    let valid = ds.iter().all(|d| verify_fork_join(&seed, target, d).is_ok());
    let diagrams: Vec<Value> = ds.iter().map(|d| d.to_json(&seed)).collect();
    let mut text = format!("{} diagrams\n", ds.len());
    for d in &ds {
        text.push_str(&format!("  {d}\n"));
    }
    text.push_str(&format!("sum = {}\n", sum.display_with(&names)));
    let json = json!({
        "size": size,
        "kind": format!("{kind:?}").to_lowercase(),
        "diagrams": diagrams,
        "sum": sum.to_json(&names),
        "valid": valid,
    });
    Ok(poset_render(&p, json, text))
}

/// Every check for one word; returns the names of the failing checks.
fn verify_word(w: &Word) -> Vec<String> {
    let mut bad = Vec::new();
    let t = LabeledTriangulation::from_word(w);
    let (a, b) = t.endpoints();
    let oracle = match ptolemy_chord_oracle(&t) {
        Ok(m) => m[&(a.min(b), a.max(b))].clone(),
        Err(e) => return vec![format!("oracle: {e}")],
    };
    if cluster_variable(w) != oracle {
        bad.push("mutation vs ptolemy".to_string());
    }
    for k in ExpansionKind::ALL {
        if expansion_sum(&expansion(w, k), k, w.len() + 1) != oracle {
            bad.push(format!("{k} sum"));
        }
    }
    for (x, y) in [
        (ExpansionKind::P, ExpansionKind::A),
        (ExpansionKind::A, ExpansionKind::T),
        (ExpansionKind::L, ExpansionKind::B),
        (ExpansionKind::B, ExpansionKind::S),
        (ExpansionKind::P, ExpansionKind::L),
        (ExpansionKind::A, ExpansionKind::B),
        (ExpansionKind::T, ExpansionKind::S),
    ] {
        if iso_witness(w, x, y).is_err() {
            bad.push(format!("{x} ~ {y}"));
        }
    }
    if !is_ideal_lattice_of(&expansion(w, ExpansionKind::P), &fence(w)).unwrap_or(false) {
        bad.push("P ideals".to_string());
    }
    if !is_ideal_lattice_of(&own_expansion(w, ExpansionKind::L), &fence(&w.dual())).unwrap_or(false) {
        bad.push("L ideals".to_string());
    }
    let g = SnakeGraph::from_word(w);
    let r = rank_recursive(&g);
    let enumerated = enumerate_l(&g).rank_generating_function().ok();
    if r != rank_hook(&g) || r != rank_fibonacci(&g) || enumerated.as_ref() != Some(&r) {
        bad.push("rank formulas".to_string());
    }
    let cf = g.continued_fraction();
    if cf.dual().dual() != cf {
        bad.push("cf dual".to_string());
    }
    bad
}

fn run_verify(word: Option<&Word>, sweep: Option<usize>) -> (Rendered, bool) {
    let words = match (word, sweep) {
        (Some(w), _) => vec![w.clone()],
        (None, Some(n)) => Word::all_up_to(n),
        (None, None) => unreachable!("clap requires one of --word or --sweep"),
    };
    let results = par::map(&words, verify_word);
    let failures: Vec<Value> = words
        .iter()
        .zip(&results)
        .filter(|(_, r)| !r.is_empty())
        .map(|(w, r)| json!({"word": w.to_string(), "failed": r}))
        .collect();
    let ok = failures.is_empty();
    let mut text = format!("checked {} words: {}\n", words.len(), if ok { "ok" } else { "MISMATCH" });
    for f in &failures {
        text.push_str(&format!("  {f}\n"));
    }
    let json = json!({"words": words.len(), "ok": ok, "failures": failures});
    (Rendered { json, dot: None, text }, ok)
}

fn emit(r: &Rendered, format: Format, out: Option<&str>) -> Result<(), String> {
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&r.json).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
        Format::Dot => r.dot.clone().ok_or("this command has no DOT output")?,
        Format::Text => r.text.clone(),
    };
    match out {
        Some(path) => fs::write(path, body).map_err(|e| format!("{path}: {e}")),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        par::init_threads(t.max(1));
    }
    let mut verified = true;
    let rendered = match &cli.command {
        Command::Expand { word, kind } => Ok(run_expand(&word.word, *kind)),
        Command::Dual { word } => Ok(run_dual(&word.word)),
        Command::Rank { shape } => Ok(run_rank(&shape.shape)),
        Command::Cf { word } => Ok(run_cf(&word.word)),
        Command::Orbit { shape } => Ok(run_orbit(&shape.shape)),
        Command::Snake { word, shape } => Ok(run_snake(word.as_ref(), shape.as_ref())),
        Command::Poset { word } => run_poset(&word.word),
        Command::Sl3 { size, kind } => run_sl3(*size as usize, *kind),
        Command::Verify { word, sweep } => {
            let (r, ok) = run_verify(word.as_ref(), *sweep);
            verified = ok;
            Ok(r)
        }
    };
    let result = rendered.and_then(|r| emit(&r, cli.format, cli.out.as_deref()));
    match result {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(()) if !verified => ExitCode::from(1),
        Ok(()) => ExitCode::SUCCESS,
    }
}
