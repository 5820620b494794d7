use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use sdim_core::graph::io::{from_edge_list_json, from_graph6, power_graph_dot, reduced_graph_dot, to_edge_list_json, to_graph6};
use sdim_core::sdim::{method_ladder, ResultRecord, DEFAULT_ORACLE_CAP};
use sdim_core::{
    build_group_with, classify_n_minus_2, clique_witness_alpha_p, clique_witness_cyclic, is_strong_resolving_set,
    maximal_cyclic_subgroups, power_graph, reduced_graph, sdim_group, sdim_oracle_with_cap, BuildOptions, Graph, Group,
    GroupSpec, Method,
};

#[derive(Parser)]
#[command(name = "sdim", version, about = "Strong metric dimension of power graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Vertex limit for the generic oracle
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Leave elapsed times out of the output
    #[arg(long, global = true)]
    no_timing: bool,
    /// Accept Cayley tables above the associativity-check limit
    #[arg(long, global = true)]
    trust_table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// sdim of a group from its structure, cross-checked against the reduction
    Compute {
        target: String,
        /// Include the strong resolving set
        #[arg(long)]
        witness: bool,
        /// Re-verify the witness and compare with the oracle when within the cap
        #[arg(long)]
        check: bool,
    },
    /// sdim by minimum vertex cover of the strong resolving graph
    Oracle {
        /// Group spec, or graph:<path> (.json edge list, otherwise graph6)
        target: String,
        #[arg(long)]
        witness: bool,
    },
    /// Evaluate every applicable method and require agreement
    Compare {
        #[arg(required_unless_present = "corpus")]
        target: Option<String>,
        /// Compare every group of the built-in corpus
        #[arg(long, conflicts_with = "target")]
        corpus: bool,
    },
    /// One row per family parameter
    Table {
        #[arg(long)]
        family: Family,
        /// Inclusive parameter range lo..hi
        #[arg(long)]
        range: String,
        /// Prime for the elementary family
        #[arg(long, default_value_t = 2)]
        prime: u64,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Also run the oracle on each row within the cap
        #[arg(long)]
        check: bool,
    },
    /// Explicit cliques of pairwise non-twin elements
    Witness {
        target: String,
        /// Restrict to one prime divisor
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Test whether sdim = n - 2 from the group structure
    Classify { target: String },
    /// Serialize the power graph or its reduced graph
    Export {
        target: String,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Export the closed-twin quotient instead
        #[arg(long)]
        reduced: bool,
        /// Write to a file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cyclic,
    Dihedral,
    Quaternion,
    Elementary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Graph6,
    Json,
}

enum Failure {
    Parse(String),
    Cap(String),
    Mismatch(String),
    Input(String),
}

impl Failure {
    fn report(&self) -> ExitCode {
        let (prefix, message, code) = match self {
            Failure::Parse(m) => ("ERROR:PARSE", m, 2),
            Failure::Cap(m) => ("ERROR:CAP", m, 2),
            Failure::Input(m) => ("ERROR:INPUT", m, 2),
            Failure::Mismatch(m) => ("ERROR:MISMATCH", m, 3),
        };
        eprintln!("{prefix} {message}");
        ExitCode::from(code)
    }
}

impl From<sdim_core::Error> for Failure {
    fn from(e: sdim_core::Error) -> Self {
        use sdim_core::Error::*;
        let message = e.to_string();
        match e {
            InvalidSpec(_) | Parse { .. } | Io { .. } => Failure::Parse(message),
            ClosureTooLarge { .. } | UncheckedTable { .. } | OracleCapExceeded { .. } | Graph6TooLarge(_) => {
                Failure::Cap(message)
            }
            InternalInconsistency(_) => Failure::Mismatch(message),
            _ => Failure::Input(message),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common;
    let result = match cli.command {
        Command::Compute { target, witness, check } => compute(&common, &target, witness, check),
        Command::Oracle { target, witness } => oracle(&common, &target, witness),
        Command::Compare { target, corpus } => compare(&common, target.as_deref(), corpus),
        Command::Table {
            family,
            range,
            prime,
            csv,
            check,
        } => table(&common, family, &range, prime, csv, check),
        Command::Witness { target, prime } => witness(&common, &target, prime),
        Command::Classify { target } => classify(&common, &target),
        Command::Export {
            target,
            format,
            reduced,
            output,
        } => export(&common, &target, format, reduced, output.as_deref()),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => failure.report(),
    }
}

fn load_group(common: &Common, target: &str) -> Result<Group, Failure> {
    let spec: GroupSpec = target.parse()?;
    let options = BuildOptions {
        trust_large_tables: common.trust_table,
        ..BuildOptions::default()
    };
    Ok(build_group_with(&spec, &options)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output serializes");
    text.push('\n');
    text
}

fn optional<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn render_record(r: &ResultRecord) -> String {
    let mut out = String::new();
    writeln!(out, "group     {}", r.group).unwrap();
    writeln!(out, "order     {}", r.order).unwrap();
    writeln!(out, "sdim      {}", r.sdim).unwrap();
    writeln!(out, "omega(R)  {}", optional(r.omega_reduced)).unwrap();
    writeln!(out, "method    {}", r.method).unwrap();
    writeln!(out, "closed    {}", optional(r.closed_form)).unwrap();
    if let Some(w) = &r.witness {
        writeln!(out, "witness   {w:?}").unwrap();
    }
    writeln!(out, "verified  {}", r.verified).unwrap();
    out
}

fn compute(common: &Common, target: &str, with_witness: bool, check: bool) -> Outcome {
    let g = load_group(common, target)?;
    let result = sdim_group(&g)?;
    let mut notes = String::new();
    if check {
        let pg = power_graph(&g);
        let w = result.witness.as_deref().unwrap_or_default();
        if w.len() != result.value || !is_strong_resolving_set(&pg, w)? {
            return Err(Failure::Mismatch(format!("{}: witness fails the definitional check", g.spec())));
        }
        if g.order() <= common.oracle_cap {
            let oracle = sdim_oracle_with_cap(&pg, common.oracle_cap)?;
            if oracle.value != result.value {
                return Err(Failure::Mismatch(format!(
                    "{}: group theorem {}, oracle {}",
                    g.spec(),
                    result.value,
                    oracle.value
                )));
            }
            writeln!(notes, "oracle    {} (agrees)", oracle.value).unwrap();
        } else {
            writeln!(notes, "oracle    skipped (order above cap {})", common.oracle_cap).unwrap();
        }
    }
    let record = ResultRecord::new(&g, &result, with_witness);
    if common.json {
        return Ok(to_json(&record));
    }
    Ok(render_record(&record) + &notes)
}

fn oracle(common: &Common, target: &str, with_witness: bool) -> Outcome {
    let (label, graph) = match target.strip_prefix("graph:") {
        Some(path) => (target.to_string(), load_graph(Path::new(path))?),
        None => {
            let g = load_group(common, target)?;
            (g.spec().to_string(), power_graph(&g))
        }
    };
    let result = sdim_oracle_with_cap(&graph, common.oracle_cap)?;
    let record = ResultRecord {
        group: label,
        order: graph.vertex_count(),
        sdim: result.value,
        omega_reduced: result.omega_reduced,
        method: result.method,
        closed_form: None,
        witness: if with_witness { result.witness } else { None },
        verified: result.verified,
    };
    if common.json {
        return Ok(to_json(&record));
    }
    Ok(render_record(&record))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let graph = if path.extension().is_some_and(|e| e == "json") {
        from_edge_list_json(&text)?
    } else {
        from_graph6(text.trim())?
    };
    Ok(graph)
}

#[derive(Serialize)]
struct LadderRow {
    method: Method,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct Comparison {
    group: String,
    order: usize,
    rows: Vec<LadderRow>,
    oracle_skipped: bool,
    agree: bool,
}

fn compare_one(common: &Common, spec: &str) -> Result<Comparison, Failure> {
    let g = load_group(common, spec)?;
    let ladder = method_ladder(&g, Some(common.oracle_cap))?;
    let rows: Vec<LadderRow> = ladder
        .iter()
        .map(|r| LadderRow {
            method: r.method,
            value: r.value,
            elapsed_ms: (!common.no_timing).then_some(r.elapsed.as_secs_f64() * 1e3),
        })
        .collect();
    Ok(Comparison {
        group: g.spec().to_string(),
        order: g.order(),
        agree: rows.windows(2).all(|w| w[0].value == w[1].value),
        oracle_skipped: g.order() > common.oracle_cap,
        rows,
    })
}

fn render_comparison(c: &Comparison, out: &mut String) {
    writeln!(out, "{} (order {})", c.group, c.order).unwrap();
    for row in &c.rows {
        let name = row.method.to_string();
        match row.elapsed_ms {
            Some(ms) => writeln!(out, "  {name:<28} {:>6}  {ms:>10.3} ms", row.value).unwrap(),
            None => writeln!(out, "  {name:<28} {:>6}", row.value).unwrap(),
        }
    }
    if c.oracle_skipped {
        writeln!(out, "  GenericOracle skipped: order above cap").unwrap();
    }
    writeln!(out, "  {}", if c.agree { "all methods agree" } else { "DISAGREEMENT" }).unwrap();
}

fn compare(common: &Common, target: Option<&str>, corpus: bool) -> Outcome {
    let specs: Vec<String> = if corpus {
        sdim_core::corpus::CORPUS.iter().map(|s| s.to_string()).collect()
    } else {
        vec![target.expect("clap requires a target").to_string()]
    };
    let comparisons = specs
        .par_iter()
        .map(|s| compare_one(common, s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = if common.json {
        if corpus {
            to_json(&comparisons)
        } else {
            to_json(&comparisons[0])
        }
    } else {
        let mut out = String::new();
        for c in &comparisons {
            render_comparison(c, &mut out);
        }
        out
    };
    let failed: Vec<&str> = comparisons.iter().filter(|c| !c.agree).map(|c| c.group.as_str()).collect();
    if !failed.is_empty() {
        // the report still goes to stdout before the error
        print!("{out}");
        out.clear();
        return Err(Failure::Mismatch(format!("methods disagree for {}", failed.join(", "))));
    }
    Ok(out)
}

fn parse_range(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Parse(format!("range {text:?}: expected lo..hi with lo <= hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn family_spec(family: Family, k: u64, prime: u64) -> GroupSpec {
    match family {
        Family::Cyclic => GroupSpec::Cyclic(k),
        Family::Dihedral => GroupSpec::Dihedral(2 * k),
        Family::Quaternion => GroupSpec::GeneralizedQuaternion(4 * k),
        Family::Elementary => GroupSpec::ElementaryAbelian { p: prime, k: k as u32 },
    }
}

#[derive(Serialize)]
struct TableRow {
    parameter: u64,
    group: String,
    order: usize,
    sdim: usize,
    omega_reduced: Option<usize>,
    method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<usize>,
}

fn table_row(common: &Common, family: Family, k: u64, prime: u64, check: bool) -> Result<TableRow, Failure> {
    let spec = family_spec(family, k, prime);
    let g = build_group_with(&spec, &BuildOptions::default())?;
    let result = sdim_group(&g)?;
    let oracle = if check && g.order() <= common.oracle_cap {
        let value = sdim_oracle_with_cap(&power_graph(&g), common.oracle_cap)?.value;
        if value != result.value {
            return Err(Failure::Mismatch(format!("{spec}: group theorem {}, oracle {value}", result.value)));
        }
        Some(value)
    } else {
        None
    };
    Ok(TableRow {
        parameter: k,
        group: spec.to_string(),
        order: g.order(),
        sdim: result.value,
        omega_reduced: result.omega_reduced,
        method: result.method,
        oracle,
    })
}

fn table(common: &Common, family: Family, range: &str, prime: u64, csv: bool, check: bool) -> Outcome {
    let (lo, hi) = parse_range(range)?;
    let rows = (lo..=hi)
        .into_par_iter()
        .map(|k| table_row(common, family, k, prime, check))
        .collect::<Result<Vec<_>, _>>()?;
    if common.json {
        return Ok(to_json(&rows));
    }
    let mut out = String::new();
    if csv {
        out.push_str("parameter,group,order,sdim,omega_reduced,method");
        out.push_str(if check { ",oracle\n" } else { "\n" });
        for r in &rows {
            write!(out, "{},{},{},{},{},{}", r.parameter, r.group, r.order, r.sdim, optional(r.omega_reduced), r.method).unwrap();
            if check {
                write!(out, ",{}", optional(r.oracle)).unwrap();
            }
            out.push('\n');
        }
        return Ok(out);
    }
    writeln!(out, "{:>5}  {:<10} {:>6} {:>6} {:>8}  method", "param", "group", "order", "sdim", "omega(R)").unwrap();
    for r in &rows {
        write!(
            out,
            "{:>5}  {:<10} {:>6} {:>6} {:>8}  {}",
            r.parameter,
            r.group,
            r.order,
            r.sdim,
            optional(r.omega_reduced),
            r.method
        )
        .unwrap();
        if let Some(o) = r.oracle {
            write!(out, "  (oracle {o})").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Serialize)]
struct WitnessReport {
    group: String,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    cyclic: Option<CyclicWitness>,
    primes: Vec<PrimeWitness>,
}

#[derive(Serialize)]
struct CyclicWitness {
    sigma: usize,
    orders: Vec<u64>,
    elements: Vec<usize>,
}

#[derive(Serialize)]
struct PrimeWitness {
    prime: u64,
    alpha: usize,
    elements: Vec<usize>,
    orders: Vec<usize>,
    non_twin_clique: bool,
}

fn witness(common: &Common, target: &str, prime: Option<u64>) -> Outcome {
    let g = load_group(common, target)?;
    let pg = power_graph(&g);
    let family = maximal_cyclic_subgroups(&g);
    let cyclic = (g.is_cyclic() && prime.is_none() && g.order() > 1).then(|| {
        let w = clique_witness_cyclic(g.order() as u64);
        CyclicWitness {
            sigma: w.elements.len(),
            orders: w.orders,
            elements: w.elements,
        }
    });
    let primes: Vec<u64> = match prime {
        Some(p) => vec![p],
        None => g
            .factorization()
            .primes()
            .filter(|&p| !family.prime_members(p).is_empty())
            .collect(),
    };
    let mut reports = Vec::new();
    for p in primes {
        // validates p before looking at M_p
        sdim_core::chain_analysis(&g, p)?;
        let elements = clique_witness_alpha_p(&g, p)?;
        reports.push(PrimeWitness {
            prime: p,
            alpha: elements.len(),
            orders: elements.iter().map(|&x| g.element_order(x)).collect(),
            non_twin_clique: pg.is_non_twin_clique(&elements),
            elements,
        });
    }
    let report = WitnessReport {
        group: g.spec().to_string(),
        order: g.order(),
        cyclic,
        primes: reports,
    };
    if common.json {
        return Ok(to_json(&report));
    }
    let mut out = format!("{} (order {})\n", report.group, report.order);
    if let Some(c) = &report.cyclic {
        writeln!(out, "  cyclic: sigma = {}, orders {:?}, elements {:?}", c.sigma, c.orders, c.elements).unwrap();
    }
    for w in &report.primes {
        writeln!(
            out,
            "  p = {}: alpha_p = {}, elements {:?}, orders {:?}, non-twin clique {}",
            w.prime, w.alpha, w.elements, w.orders, w.non_twin_clique
        )
        .unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct Classification {
    group: String,
    order: usize,
    sdim: usize,
    n_minus_2: bool,
    class: Option<&'static str>,
    description: Option<String>,
}

fn classify(common: &Common, target: &str) -> Outcome {
    let g = load_group(common, target)?;
    let class = classify_n_minus_2(&g);
    let sdim = sdim_group(&g)?.value;
    if class.is_some() != (sdim + 2 == g.order()) {
        return Err(Failure::Mismatch(format!(
            "{}: classifier says {}, sdim is {sdim} of {}",
            g.spec(),
            class.is_some(),
            g.order()
        )));
    }
    let report = Classification {
        group: g.spec().to_string(),
        order: g.order(),
        sdim,
        n_minus_2: class.is_some(),
        class: class.map(|c| c.label()),
        description: class.map(|c| c.to_string()),
    };
    if common.json {
        return Ok(to_json(&report));
    }
    Ok(match class {
        Some(c) => format!("{}: sdim = n - 2 = {sdim}, class {c}\n", report.group),
        None => format!("{}: sdim = {sdim}, not n - 2 (n = {})\n", report.group, report.order),
    })
}

fn export(common: &Common, target: &str, format: Format, reduced: bool, output: Option<&Path>) -> Outcome {
    let g = load_group(common, target)?;
    let pg = power_graph(&g);
    let text = if reduced {
        let r = reduced_graph(&pg);
        match format {
            Format::Dot => reduced_graph_dot(&r),
            Format::Graph6 => to_graph6(&r.quotient)? + "\n",
            Format::Json => to_edge_list_json(&r.quotient) + "\n",
        }
    } else {
        match format {
            Format::Dot => power_graph_dot(&g, &pg),
            Format::Graph6 => to_graph6(&pg)? + "\n",
            Format::Json => to_edge_list_json(&pg) + "\n",
        }
    };
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
