//! Single command-line entry point for the (I, F_k) toolkit.
//!
//! Exit codes: 0 success/feasible, 1 infeasible/not-critical/invalid
//! coloring, 2 usage or parse error, 3 solver budget exceeded. All numeric
//! output is exact (integers or num/den rationals).

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ifk::{
    discharge, expand_precoloring, gadget, is_critical, min_potential_subset, potential, sharpness_graph,
    solve_with_budget, verify, CoefficientTable, Coloring, CriticalityVerdict, GadgetKind, Label, MinMode,
    PrecoloredGraph, SolveOutcome, VertexState,
};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ifk", version, about = "Exact tools for independent-set/bounded-forest vertex partitions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the coefficient table for k.
    Coeffs { k: usize },
    /// Print the density threshold f(k) as an exact rational.
    Threshold { k: usize },
    /// Print the exact maximum average degree of a graph and a densest set.
    Mad { file: PathBuf },
    /// Print the girth of a graph, or "infinity" for forests.
    Girth { file: PathBuf },
    /// Evaluate the potential of a subset, or minimize it over subsets.
    Potential {
        file: PathBuf,
        /// Comma-separated vertex ids to evaluate.
        #[arg(long, value_delimiter = ',', conflicts_with = "min")]
        subset: Option<Vec<usize>>,
        /// Minimize over this family of subsets.
        #[arg(long, value_enum)]
        min: Option<MinArg>,
    },
    /// Find a coloring of each input instance.
    Color {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Give up after this many search nodes (exit code 3).
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Emit graphviz DOT (I vertices black, F vertices white).
        #[arg(long)]
        dot: bool,
        /// Solve multiple files on this many threads; output stays in input order.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check a coloring file against an instance.
    Verify { file: PathBuf, coloring: PathBuf },
    /// Decide whether an instance is critical.
    Critical { file: PathBuf },
    /// Emit generated instances in the graph file format.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Replace every precolored vertex by its gadget.
    Expand { file: PathBuf },
    /// Print the charge audit as TSV.
    Discharge { file: PathBuf },
    /// Color a planar graph with k chosen from its girth (9/8/7 -> 3/4/6).
    GirthCorollary { file: PathBuf },
}

#[derive(Subcommand)]
enum GenCmd {
    /// The tight family G_{k,t}.
    Sharpness { k: usize, t: usize },
    /// A precoloring gadget; KIND is U, F, or I (I takes j = 0).
    Gadget { kind: String, j: usize, k: usize },
}

#[derive(ValueEnum, Clone, Copy)]
enum MinArg {
    All,
    Nonempty,
    Proper,
}

impl From<MinArg> for MinMode {
    fn from(m: MinArg) -> MinMode {
        match m {
            MinArg::All => MinMode::All,
            MinArg::Nonempty => MinMode::Nonempty,
            MinArg::Proper => MinMode::NonemptyProper,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<PrecoloredGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    PrecoloredGraph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Coeffs { k } => {
            let table = CoefficientTable::new(k)?;
            println!("k {k}");
            println!("C_E {}", table.c_e());
            for (j, c) in table.c_u_all().iter().enumerate() {
                println!("C_U {j} {c}");
            }
            for (j, c) in table.c_f_all().iter().enumerate() {
                println!("C_F {} {c}", j + 1);
            }
            println!("C_I {}", table.c_i());
            Ok(0)
        }
        Cmd::Threshold { k } => {
            let f = ifk::f_threshold(k)?;
            println!("{}/{}", f.numer(), f.denom());
            Ok(0)
        }
        Cmd::Mad { file } => {
            let g = load(&file)?;
            let (value, witness) = ifk::mad(g.graph())?;
            println!("{}/{}", value.numer(), value.denom());
            println!("witness{}", witness.iter().fold(String::new(), |mut s, v| {
                let _ = write!(s, " {v}");
                s
            }));
            Ok(0)
        }
        Cmd::Girth { file } => {
            let g = load(&file)?;
            match g.graph().girth() {
                Some(girth) => println!("{girth}"),
                None => println!("infinity"),
            }
            Ok(0)
        }
        Cmd::Potential { file, subset, min } => {
            let g = load(&file)?;
            match (subset, min) {
                (Some(r), None) => {
                    println!("{}", potential(&g, &r)?);
                    Ok(0)
                }
                (None, Some(mode)) => {
                    let (value, witness) = min_potential_subset(&g, mode.into())?;
                    println!("{value}");
                    println!("witness{}", witness.iter().fold(String::new(), |mut s, v| {
                        let _ = write!(s, " {v}");
                        s
                    }));
                    Ok(0)
                }
                _ => bail!("potential needs exactly one of --subset or --min"),
            }
        }
        Cmd::Color { files, max_nodes, dot, jobs } => cmd_color(&files, max_nodes.unwrap_or(u64::MAX), dot, jobs),
        Cmd::Verify { file, coloring } => {
            let g = load(&file)?;
            let text = std::fs::read_to_string(&coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let (parsed, stated) = parse_coloring(g.vertex_count(), &text)?;
            match check_coloring(&g, &parsed, &stated) {
                Ok(()) => {
                    println!("ok");
                    Ok(0)
                }
                Err(msg) => {
                    println!("invalid: {msg}");
                    Ok(1)
                }
            }
        }
        Cmd::Critical { file } => {
            let g = load(&file)?;
            match is_critical(&g) {
                CriticalityVerdict::Critical => {
                    println!("critical");
                    Ok(0)
                }
                CriticalityVerdict::Colorable(_) => {
                    println!("colorable");
                    Ok(1)
                }
                CriticalityVerdict::NotMinimal(sub) => {
                    println!("not minimal: {sub}");
                    Ok(1)
                }
            }
        }
        Cmd::Gen { what } => match what {
            GenCmd::Sharpness { k, t } => {
                let g = sharpness_graph(k, t)?;
                println!("# sharpness instance G_{{{k},{t}}}");
                println!("# vertices: spine triangles (v_j, w_j, x_j) = (3j, 3j+1, 3j+2) for j = 0..{t},");
                println!("# then pendent-triangle pairs at v_0, w_0, x_0, v_{t}, then 2-thread pairs");
                println!("# for j = 1..{t} (threads to v_j, then w_j, then x_j).");
                print!("{}", g.to_file_string());
                Ok(0)
            }
            GenCmd::Gadget { kind, j, k } => {
                let kind = match kind.as_str() {
                    "U" => GadgetKind::U(j),
                    "F" => GadgetKind::F(j),
                    "I" if j == 0 => GadgetKind::I,
                    "I" => bail!("the I gadget takes j = 0"),
                    other => bail!("unknown gadget kind {other:?}; use U, F, or I"),
                };
                let rooted = gadget(kind, k)?;
                println!("# gadget {kind} for k = {k}; root is vertex {}", rooted.root);
                print!("{}", PrecoloredGraph::trivial(rooted.graph, k)?.to_file_string());
                Ok(0)
            }
        },
        Cmd::Expand { file } => {
            let g = load(&file)?;
            let (expanded, _embedding) = expand_precoloring(&g);
            println!("# expansion; original vertices keep ids 0..{}", g.vertex_count().saturating_sub(1));
            print!("{}", expanded.to_file_string());
            Ok(0)
        }
        Cmd::Discharge { file } => {
            let g = load(&file)?;
            let report = discharge(&g)?;
            println!("vertex\tclass\tinitial\tfinal");
            for v in 0..g.vertex_count() {
                println!("{v}\t{}^{}\t{}\t{}", g.state(v), g.graph().degree(v), report.initial[v], report.post[v]);
            }
            println!("total\t\t{}\t{}", report.total_initial(), report.total_post());
            let all: Vec<usize> = (0..g.vertex_count()).collect();
            let rho = potential(&g, &all)?;
            println!("-2rho\t\t{}\t{}", -2 * rho, -2 * rho);
            Ok(0)
        }
        Cmd::GirthCorollary { file } => cmd_girth_corollary(&file),
    }
}

fn coloring_output(g: &PrecoloredGraph, c: &Coloring) -> String {
    let comps = verify(g, c).expect("solver output verifies");
    let mut place = vec![None; g.vertex_count()];
    for comp in &comps {
        for &v in &comp.vertices {
            place[v] = Some((comp.root, comp.weight));
        }
    }
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        match place[v] {
            None => {
                let _ = writeln!(out, "v {v} I");
            }
            Some((root, weight)) => {
                let _ = writeln!(out, "v {v} F {root} {weight}");
            }
        }
    }
    out
}

fn dot_output(g: &PrecoloredGraph, c: &Coloring) -> String {
    let mut out = String::from("graph {\n  node [style=filled];\n");
    for v in 0..g.vertex_count() {
        match c.labels[v] {
            Label::I => {
                let _ = writeln!(out, "  {v} [fillcolor=black fontcolor=white];");
            }
            Label::F => {
                let _ = writeln!(out, "  {v} [fillcolor=white];");
            }
        }
    }
    for &(u, v) in g.graph().edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn cmd_color(files: &[PathBuf], budget: u64, dot: bool, jobs: Option<usize>) -> Result<u8> {
    let run_one = |path: &PathBuf| -> Result<(String, u8)> {
        let g = load(path)?;
        Ok(match solve_with_budget(&g, budget) {
            SolveOutcome::Colored(c) => (if dot { dot_output(&g, &c) } else { coloring_output(&g, &c) }, 0),
            SolveOutcome::Infeasible => ("infeasible\n".to_string(), 1),
            SolveOutcome::BudgetExceeded => ("budget exceeded\n".to_string(), 3),
        })
    };
    let results = run_batch(files, jobs, run_one);
    let mut code = 0;
    let mut out = String::new();
    for (path, result) in files.iter().zip(results) {
        let (text, one) = result?;
        if files.len() > 1 {
            let _ = writeln!(out, "== {}", path.display());
        }
        out.push_str(&text);
        code = code.max(one);
    }
    print!("{out}");
    Ok(code)
}

fn run_batch<T, U, F>(items: &[T], jobs: Option<usize>, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        if j > 1 {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(j).build().expect("thread pool");
            return pool.install(|| {
                use rayon::prelude::*;
                items.par_iter().map(&f).collect()
            });
        }
    }
    let _ = jobs;
    items.iter().map(|t| f(t)).collect()
}

/// Parses a coloring file: `v <id> I` or `v <id> F <component> <weight>`
/// per vertex, `#` comments. Returns the labels and the stated
/// (component, weight) annotations for F vertices.
#[allow(clippy::type_complexity)]
fn parse_coloring(n: usize, text: &str) -> Result<(Coloring, Vec<Option<(usize, usize)>>)> {
    let mut labels: Vec<Option<Label>> = vec![None; n];
    let mut stated: Vec<Option<(usize, usize)>> = vec![None; n];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let mut tok = line.split_whitespace();
        if tok.next() != Some("v") {
            bail!("line {lineno}: expected a `v` line");
        }
        let id: usize = tok
            .next()
            .with_context(|| format!("line {lineno}: missing vertex id"))?
            .parse()
            .with_context(|| format!("line {lineno}: bad vertex id"))?;
        if id >= n {
            bail!("line {lineno}: vertex {id} out of range for a graph on {n} vertices");
        }
        if labels[id].is_some() {
            bail!("line {lineno}: vertex {id} listed twice");
        }
        match tok.next() {
            Some("I") => labels[id] = Some(Label::I),
            Some("F") => {
                let comp: usize = tok
                    .next()
                    .with_context(|| format!("line {lineno}: F needs a component id"))?
                    .parse()
                    .with_context(|| format!("line {lineno}: bad component id"))?;
                let weight: usize = tok
                    .next()
                    .with_context(|| format!("line {lineno}: F needs a weight"))?
                    .parse()
                    .with_context(|| format!("line {lineno}: bad weight"))?;
                labels[id] = Some(Label::F);
                stated[id] = Some((comp, weight));
            }
            other => bail!("line {lineno}: expected I or F, got {other:?}"),
        }
        if tok.next().is_some() {
            bail!("line {lineno}: trailing tokens");
        }
    }
    if let Some(missing) = labels.iter().position(|l| l.is_none()) {
        bail!("vertex {missing} has no label");
    }
    let labels = labels.into_iter().map(|l| l.expect("checked above")).collect();
    Ok((Coloring { labels }, stated))
}

fn check_coloring(g: &PrecoloredGraph, c: &Coloring, stated: &[Option<(usize, usize)>]) -> Result<(), String> {
    let comps = verify(g, c).map_err(|v| v.to_string())?;
    for comp in &comps {
        for &v in &comp.vertices {
            match stated[v] {
                Some((root, weight)) if root == comp.root && weight == comp.weight => {}
                Some((root, weight)) => {
                    return Err(format!(
                        "vertex {v} states component {root} weight {weight}, actual component {} weight {}",
                        comp.root, comp.weight
                    ));
                }
                None => unreachable!("F-labeled vertices carry annotations"),
            }
        }
    }
    Ok(())
}

fn cmd_girth_corollary(file: &PathBuf) -> Result<u8> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let g = PrecoloredGraph::parse(&text).with_context(|| format!("parsing {}", file.display()))?;
    let planar = text
        .lines()
        .any(|l| l.trim().strip_prefix('#').map(|rest| rest.trim() == "planar").unwrap_or(false));
    if !planar {
        bail!("girth-corollary needs a `# planar` header comment asserting planarity");
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.state(v) != VertexState::U(0)) {
        bail!("girth-corollary applies to uncolored graphs only; vertex {v} is {}", g.state(v));
    }
    let girth = g.graph().girth();
    let k = match girth {
        None => 3,
        Some(girth) if girth >= 9 => 3,
        Some(8) => 4,
        Some(7) => 6,
        Some(girth) => bail!("girth {girth} is below 7; the corollary does not apply"),
    };
    match girth {
        Some(girth) => println!("girth {girth}"),
        None => println!("girth infinity"),
    }
    println!("k {k}");
    let instance = PrecoloredGraph::trivial(g.graph().clone(), k)?;
    match ifk::solve(&instance) {
        SolveOutcome::Colored(c) => {
            print!("{}", coloring_output(&instance, &c));
            Ok(0)
        }
        SolveOutcome::Infeasible => {
            println!("infeasible");
            Ok(1)
        }
        SolveOutcome::BudgetExceeded => unreachable!("unbounded solve"),
    }
}
