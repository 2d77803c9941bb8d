//! Command-line front-end: build graphs from specs, enumerate automorphism
//! groups, run the exact distinguishing-number/index search, evaluate the
//! closed-form family values, emit verified constructive labelings, and
//! compare formulas against the exact oracle.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use symbreak::aut;
use symbreak::error::Error;
use symbreak::family::parse_spec;
use symbreak::formulas;
use symbreak::graph::Graph;
use symbreak::labelings::{self, Construction};
use symbreak::search::{self, LabelKind, SearchOptions, SearchResult};

#[derive(Parser)]
#[command(name = "symbreak", version, about = "Exact distinguishing numbers and indices")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SearchArgs {
    /// Stop after this many labels
    #[arg(long)]
    max_labels: Option<usize>,
    /// Wall-clock budget in milliseconds
    #[arg(long, default_value_t = 600_000)]
    budget_ms: u64,
    /// Worker threads for exhaustive sweeps (default: SYMBREAK_THREADS or 1)
    #[arg(long)]
    threads: Option<usize>,
    /// Seed for the randomized heuristic phase
    #[arg(long, default_value_t = 0x5d15_7e55)]
    seed: u64,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        let env_threads = std::env::var("SYMBREAK_THREADS")
            .ok()
            .and_then(|s| s.parse().ok());
        SearchOptions {
            max_labels: self.max_labels,
            budget_ms: self.budget_ms,
            threads: self.threads.or(env_threads).unwrap_or(1).max(1),
            seed: self.seed,
            ..SearchOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph built from a spec
    Gen {
        spec: String,
        /// DOT output instead of the edge-list format
        #[arg(long)]
        dot: bool,
    },
    /// Enumerate the automorphism group
    Aut {
        spec: String,
        /// Also print the elements (up to a limit)
        #[arg(long)]
        elements: bool,
    },
    /// Exact distinguishing number
    Dnum {
        spec: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exact distinguishing index
    Dindex {
        spec: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Closed-form values and bounds
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Verified constructive labelings
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
        /// DOT output with the labels attached
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Re-check a claimed value and witness
    Verify {
        spec: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Comma-separated labels, one per vertex/edge
        #[arg(long)]
        labels: String,
        /// Claimed value (default: the largest label used)
        #[arg(long)]
        claimed: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Formula vs. oracle, side by side
    Compare {
        spec: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Count-vector table for the corona edge bound
    Table {
        #[command(subcommand)]
        which: TableCmd,
    },
}

#[derive(clap::ValueEnum, Clone, Copy)]
enum KindArg {
    Vertex,
    Edge,
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// n!·2^n
    FriendshipAutOrder { n: usize },
    /// 2·n!
    BookAutOrder { n: usize },
    /// Product of the factor group orders
    CoronaAutOrder { aut_g: u64, aut_h: u64 },
    /// D of the friendship graph
    FriendshipNumber { n: u64 },
    /// D' of the friendship graph
    FriendshipIndex { n: u64 },
    /// D of the book graph
    BookNumber { n: u64 },
    /// D' of the star-path product (book graphs are m=2)
    StarPathIndex { n: u64, m: u64 },
    /// D of a corona from the factor values
    CoronaNumber {
        d_g: u64,
        d_h: u64,
        #[arg(long)]
        g_is_k1: bool,
    },
    /// The D(G) > D(H) sandwich with both bound routes
    CoronaNumberSpecial { d_g: u64, d_h: u64 },
    /// Every published D' bound that applies to the parameters
    CoronaIndex {
        dp_g: u64,
        dp_h: u64,
        n_g: u64,
        n_h: u64,
        #[arg(long)]
        g_asymmetric: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    FriendshipVertices { n: usize },
    FriendshipEdges { n: usize },
    BookVertices { n: usize },
    CoronaVerticesEqual { g: String, h: String },
    CoronaVerticesSpecial { g: String, h: String },
    CoronaVerticesApex { h: String },
    CoronaEdgesPairs { g: String, h: String },
    CoronaEdgesAsymmetric { g: String, h: String },
    CoronaEdgesStaircase { g: String, h: String },
    CoronaEdgesCountVectors {
        g: String,
        h: String,
        /// Label budget (default: whatever the table needs)
        #[arg(long, default_value_t = 64)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum TableCmd {
    /// x_r / y_r rows up to the threshold for n copies
    CoronaEdge {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 64)]
        k_max: usize,
        /// CSV output
        #[arg(long)]
        csv: bool,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            std::process::exit(1);
        }
        Err(e) => {
            print!("{e}");
            std::process::exit(0);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            if json {
                println!("{}", json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            std::process::exit(match e {
                Error::Parse(_) | Error::InvalidParameter(_) => 1,
                _ => 2,
            });
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let json = cli.json;
    match cli.command {
        Command::Gen { spec, dot } => {
            let g = parse_spec(&spec)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "vertices": g.vertex_count(),
                        "edges": g.edges(),
                        "family": g.family(),
                    })
                );
            } else if dot {
                print!("{}", g.to_dot(None, None));
            } else {
                print!("{}", g.to_edge_list());
            }
            Ok(0)
        }
        Command::Aut { spec, elements } => {
            let g = parse_spec(&spec)?;
            let group = aut::enumerate_automorphisms(&g, Some(20_000_000))?;
            if json {
                let limit = if elements { 10_000 } else { 0 };
                println!("{}", group.to_json(limit));
            } else {
                println!("order {}", group.order());
                if elements {
                    for p in group.elements().iter().take(10_000) {
                        println!("{:?}", p.image());
                    }
                }
            }
            Ok(0)
        }
        Command::Dnum { spec, search } => {
            let g = parse_spec(&spec)?;
            let res = search::exact_distinguishing_number(&g, &search.options())?;
            print_search_result(&res, json);
            Ok(0)
        }
        Command::Dindex { spec, search } => {
            let g = parse_spec(&spec)?;
            let res = search::exact_distinguishing_index(&g, &search.options())?;
            print_search_result(&res, json);
            Ok(0)
        }
        Command::Formula { which } => {
            let value = formula_json(which)?;
            if json {
                println!("{value}");
            } else {
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            }
            Ok(0)
        }
        Command::Construct { which, dot } => {
            let opts = SearchOptions::default();
            let c = construct(which, &opts)?;
            if json {
                println!("{}", serde_json::to_value(&c).expect("serializable"));
            } else if dot {
                let (v, e) = match c.kind {
                    LabelKind::Vertex => (Some(c.labels.as_slice()), None),
                    LabelKind::Edge => (None, Some(c.labels.as_slice())),
                };
                print!("{}", c.graph.to_dot(v, e));
            } else {
                println!("scheme {}", c.scheme);
                println!("labels_used {}", c.labels_used);
                println!(
                    "labels {}",
                    c.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
                );
            }
            Ok(0)
        }
        Command::Verify { spec, kind, labels, claimed, search } => {
            let g = parse_spec(&spec)?;
            let labels: Vec<usize> = labels
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad label {t:?}"))))
                .collect::<Result<_, _>>()?;
            let kind = match kind {
                KindArg::Vertex => LabelKind::Vertex,
                KindArg::Edge => LabelKind::Edge,
            };
            let claimed = claimed.unwrap_or_else(|| search::max_label(&labels));
            let report = search::verify_claimed_value(&g, kind, claimed, &labels, &search.options())?;
            if json {
                println!("{}", serde_json::to_value(&report).expect("serializable"));
            } else {
                println!(
                    "claimed {} upper_bound_certified {} lower_bound_certified {}",
                    report.claimed, report.upper_bound_certified, report.lower_bound_certified
                );
            }
            Ok(0)
        }
        Command::Compare { spec, search } => {
            let rows = compare(&spec, &search.options())?;
            let all_agree = rows.iter().all(|r| r.agree);
            if json {
                println!("{}", serde_json::to_value(&rows).expect("serializable"));
            } else {
                for r in &rows {
                    println!(
                        "{}: formula {} oracle {} {}",
                        r.name,
                        r.formula,
                        r.oracle,
                        if r.agree { "agree" } else { "MISMATCH" }
                    );
                }
            }
            Ok(if all_agree { 0 } else { 3 })
        }
        Command::Table { which } => {
            let TableCmd::CoronaEdge { m, n, k_max, csv } = which;
            let table = formulas::corona_edge_bound_table(m, n, k_max)?;
            if json {
                println!("{}", serde_json::to_value(&table).expect("serializable"));
            } else if csv {
                print!("{}", table.to_csv());
            } else {
                println!("m {} threshold {}", table.m, table.threshold);
                for (i, (x, y)) in table.x.iter().zip(&table.y).enumerate() {
                    println!("r {} x {} y {}", i + 1, x, y);
                }
            }
            Ok(0)
        }
    }
}

fn print_search_result(res: &SearchResult, json: bool) {
    if json {
        // elapsed_ms is zeroed so identical inputs print identical bytes
        let mut v = serde_json::to_value(res).expect("serializable");
        v["elapsed_ms"] = json!(0);
        println!("{v}");
    } else {
        match res.value {
            Some(v) => println!("value {v}"),
            None => println!("value none (edge-kernel)"),
        }
        if let Some(w) = &res.witness {
            println!(
                "witness {}",
                w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
            );
        }
        println!("group_order {}", res.group_order);
        println!("tested {}", res.labelings_tested);
    }
}

fn formula_json(cmd: FormulaCmd) -> Result<serde_json::Value, Error> {
    Ok(match cmd {
        FormulaCmd::FriendshipAutOrder { n } => {
            json!({ "name": "friendship-aut-order", "value": formulas::aut_order_friendship(n)? })
        }
        FormulaCmd::BookAutOrder { n } => {
            json!({ "name": "book-aut-order", "value": formulas::aut_order_book(n)? })
        }
        FormulaCmd::CoronaAutOrder { aut_g, aut_h } => {
            json!({ "name": "corona-aut-order", "value": formulas::aut_order_corona(aut_g, aut_h) })
        }
        FormulaCmd::FriendshipNumber { n } => {
            serde_json::to_value(formulas::dist_number_friendship(n)?).expect("serializable")
        }
        FormulaCmd::FriendshipIndex { n } => {
            serde_json::to_value(formulas::dist_index_friendship(n)?).expect("serializable")
        }
        FormulaCmd::BookNumber { n } => {
            serde_json::to_value(formulas::dist_number_book(n)?).expect("serializable")
        }
        FormulaCmd::StarPathIndex { n, m } => {
            serde_json::to_value(formulas::dist_index_star_path(n, m)?).expect("serializable")
        }
        FormulaCmd::CoronaNumber { d_g, d_h, g_is_k1 } => {
            serde_json::to_value(formulas::corona_number_relation(d_g, d_h, g_is_k1)?)
                .expect("serializable")
        }
        FormulaCmd::CoronaNumberSpecial { d_g, d_h } => {
            serde_json::to_value(formulas::corona_number_bound_special(d_g, d_h)?)
                .expect("serializable")
        }
        FormulaCmd::CoronaIndex { dp_g, dp_h, n_g, n_h, g_asymmetric } => {
            let flags = formulas::CoronaIndexFlags {
                g_asymmetric,
                both_connected: true,
            };
            serde_json::to_value(formulas::corona_index_bounds(dp_g, dp_h, n_g, n_h, flags)?)
                .expect("serializable")
        }
    })
}

fn vertex_witness(g: &Graph, opts: &SearchOptions) -> Result<Vec<usize>, Error> {
    let res = search::exact_distinguishing_number(g, opts)?;
    Ok(res.witness.expect("number search always yields a witness"))
}

fn edge_witness(g: &Graph, opts: &SearchOptions) -> Result<Vec<usize>, Error> {
    let res = search::exact_distinguishing_index(g, opts)?;
    res.witness
        .ok_or_else(|| Error::WrongRegime("factor has no distinguishing edge labeling".into()))
}

fn construct(cmd: ConstructCmd, opts: &SearchOptions) -> Result<Construction, Error> {
    match cmd {
        ConstructCmd::FriendshipVertices { n } => labelings::label_friendship_vertices(n),
        ConstructCmd::FriendshipEdges { n } => labelings::label_friendship_edges(n),
        ConstructCmd::BookVertices { n } => labelings::label_book_vertices(n),
        ConstructCmd::CoronaVerticesEqual { g, h } => {
            let (g, h) = (parse_spec(&g)?, parse_spec(&h)?);
            let (lg, lh) = (vertex_witness(&g, opts)?, vertex_witness(&h, opts)?);
            labelings::label_corona_vertices_equal_regime(&g, &h, &lg, &lh)
        }
        ConstructCmd::CoronaVerticesSpecial { g, h } => {
            let (g, h) = (parse_spec(&g)?, parse_spec(&h)?);
            let (lg, lh) = (vertex_witness(&g, opts)?, vertex_witness(&h, opts)?);
            labelings::label_corona_vertices_special_regime(&g, &h, &lg, &lh)
        }
        ConstructCmd::CoronaVerticesApex { h } => {
            let h = parse_spec(&h)?;
            let lh = vertex_witness(&h, opts)?;
            labelings::label_corona_vertices_apex(&h, &lh)
        }
        ConstructCmd::CoronaEdgesPairs { g, h } => {
            let (g, h) = (parse_spec(&g)?, parse_spec(&h)?);
            let (lg, lh) = (edge_witness(&g, opts)?, edge_witness(&h, opts)?);
            labelings::label_corona_edges_pair_scheme(&g, &h, &lg, &lh)
        }
        ConstructCmd::CoronaEdgesAsymmetric { g, h } => {
            let (g, h) = (parse_spec(&g)?, parse_spec(&h)?);
            labelings::label_corona_edges_asymmetric_g(&g, &h, opts)
        }
        ConstructCmd::CoronaEdgesStaircase { g, h } => {
            let (g, h) = (parse_spec(&g)?, parse_spec(&h)?);
            labelings::label_corona_edges_staircase(&g, &h, opts)
        }
        ConstructCmd::CoronaEdgesCountVectors { g, h, k } => {
            let (g, h) = (parse_spec(&g)?, parse_spec(&h)?);
            labelings::label_corona_edges_count_vectors(&g, &h, k, opts)
        }
    }
}

#[derive(serde::Serialize)]
struct CompareRow {
    name: String,
    formula: u64,
    oracle: u64,
    agree: bool,
}

fn row(name: &str, formula: u64, oracle: u64) -> CompareRow {
    CompareRow {
        name: name.into(),
        formula,
        oracle,
        agree: formula == oracle,
    }
}

/// Runs every formula that covers the spec's family against the exact
/// oracle. Friendship and book specs compare both the group order and the
/// distinguishing values; corona specs compare the group-order product.
fn compare(spec: &str, opts: &SearchOptions) -> Result<Vec<CompareRow>, Error> {
    let g = parse_spec(spec)?;
    let family = g.family().unwrap_or("").to_string();
    let mut rows = Vec::new();
    if let Some(n) = family_param(&family, "friendship") {
        let group = aut::enumerate_automorphisms(&g, opts.group_cap)?;
        rows.push(row(
            "friendship-aut-order",
            formulas::aut_order_friendship(n as usize)?,
            group.order(),
        ));
        let dnum = search::exact_distinguishing_number(&g, opts)?;
        rows.push(row(
            "friendship-number",
            formulas::dist_number_friendship(n)?.formula_value,
            dnum.value.expect("number exists") as u64,
        ));
        let didx = search::exact_distinguishing_index(&g, opts)?;
        rows.push(row(
            "friendship-index",
            formulas::dist_index_friendship(n)?.formula_value,
            didx.value.expect("no edge kernel in a friendship graph") as u64,
        ));
    } else if let Some(n) = family_param(&family, "book") {
        let group = aut::enumerate_automorphisms(&g, opts.group_cap)?;
        rows.push(row(
            "book-aut-order",
            formulas::aut_order_book(n as usize)?,
            group.order(),
        ));
        let dnum = search::exact_distinguishing_number(&g, opts)?;
        rows.push(row(
            "book-number",
            formulas::dist_number_book(n)?.formula_value,
            dnum.value.expect("number exists") as u64,
        ));
        let didx = search::exact_distinguishing_index(&g, opts)?;
        rows.push(row(
            "star-path-index",
            formulas::dist_index_star_path(n, 2)?.formula_value,
            didx.value.expect("no edge kernel in a book graph") as u64,
        ));
    } else if let Some(rest) = spec.trim().strip_prefix("corona(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("malformed corona spec {spec:?}")))?;
        let (ga, hb) = split_top(inner)
            .ok_or_else(|| Error::Parse(format!("cannot split corona spec {spec:?}")))?;
        let (gf, hf) = (parse_spec(ga)?, parse_spec(hb)?);
        let order_g = aut::enumerate_automorphisms(&gf, opts.group_cap)?.order();
        let order_h = aut::enumerate_automorphisms(&hf, opts.group_cap)?.order();
        let order = aut::enumerate_automorphisms(&g, opts.group_cap)?.order();
        rows.push(row(
            "corona-aut-order",
            formulas::aut_order_corona(order_g, order_h),
            order,
        ));
    } else {
        return Err(Error::InvalidParameter(format!(
            "no closed form covers {spec:?}; use dnum/dindex directly"
        )));
    }
    Ok(rows)
}

fn family_param(family: &str, name: &str) -> Option<u64> {
    family
        .strip_prefix(name)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
}

/// Splits at the top-level comma of an `a,b` spec pair.
fn split_top(inner: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}
