use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use powergraph::algorithms::{
    connected_components, find_bridges, is_bipartite, is_complete, is_eulerian, is_planar, is_tree,
    srg_parameters, Bipartiteness, Planarity,
};
use powergraph::graph::UndirectedGraph;
use powergraph::group::{
    alternating, build_cyclic, build_dihedral, build_elementary_abelian, build_from_permutations,
    build_generalized_quaternion, build_heisenberg, direct_product, load_cayley_table,
    parse_cycles, symmetric, write_cayley_table, Group, Permutation,
};
use powergraph::number_theory::prime_power;
use powergraph::power_graph::{
    build_directed, build_punctured, build_punctured_directed, build_undirected,
};
use powergraph::theorems::{run_selected, MIN_SWEEP_ORDER, REGISTRY};

/// Power graphs of finite groups.
#[derive(Parser)]
#[command(name = "powergraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and write its Cayley table.
    Build {
        #[arg(value_enum)]
        family: Family,
        /// Family parameters: cyclic n, elemab p k, genq m, dihedral m,
        /// heisenberg p, sym d, alt d, perm CYCLES..., product A B, table FILE.
        #[arg(required = true, num_args = 1..)]
        params: Vec<String>,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Replace the default group label.
        #[arg(long)]
        label: Option<String>,
    },
    /// Print vertex, edge and degree statistics of a power graph.
    Graph {
        file: PathBuf,
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        json: bool,
    },
    /// Decide a graph property and print a verdict with its witness.
    Check {
        #[arg(value_enum)]
        property: Property,
        file: PathBuf,
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        json: bool,
    },
    /// Run theorem checks over the built-in catalog.
    Verify {
        /// Theorem ids, or `all`.
        #[arg(required = true)]
        ids: Vec<String>,
        #[arg(long, env = "POWERGRAPH_MAX_ORDER", default_value_t = 60)]
        max_order: usize,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write a power graph as DOT or as an edge list.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        directed: bool,
        /// Drop the identity vertex.
        #[arg(long)]
        punctured: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Which {
    /// Use P*(G); this is the default.
    #[arg(long, conflicts_with = "full")]
    punctured: bool,
    /// Use P(G) with the identity.
    #[arg(long)]
    full: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cyclic,
    Elemab,
    Genq,
    Dihedral,
    Heisenberg,
    Sym,
    Alt,
    Perm,
    Product,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Connected,
    Bipartite,
    Planar,
    Eulerian,
    Srg,
    Bridges,
    Complete,
    Tree,
    Eppo,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Edges,
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build {
            family,
            params,
            out,
            label,
        } => build(family, &params, out.as_deref(), label),
        Command::Graph { file, which, json } => graph(&file, &which, json),
        Command::Check {
            property,
            file,
            which,
            json,
        } => check(property, &file, &which, json),
        Command::Verify {
            ids,
            max_order,
            report,
        } => verify(&ids, max_order, report.as_deref()),
        Command::Export {
            file,
            format,
            directed,
            punctured,
            out,
        } => export(&file, format, directed, punctured, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            eprintln!("run `powergraph help` for usage");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Group, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    load_cayley_table(BufReader::new(file))
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn number(params: &[String], i: usize, what: &str) -> Result<usize, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| Failure::Usage(format!("missing parameter {what}")))?;
    raw.parse().map_err(|_| {
        Failure::Usage(format!(
            "{what} must be a non-negative integer, got {raw:?}"
        ))
    })
}

fn arity(params: &[String], n: usize, family: &str) -> Outcome {
    if params.len() != n {
        return Err(Failure::Usage(format!(
            "{family} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn build_group(family: Family, params: &[String]) -> Result<Group, Failure> {
    let one = |name: &str| -> Result<usize, Failure> {
        arity(params, 1, name)?;
        number(params, 0, name)
    };
    let group = match family {
        Family::Cyclic => build_cyclic(one("n")?)?,
        Family::Elemab => {
            arity(params, 2, "elemab")?;
            let k = u32::try_from(number(params, 1, "k")?)?;
            build_elementary_abelian(number(params, 0, "p")?, k)?
        }
        Family::Genq => build_generalized_quaternion(one("m")?)?,
        Family::Dihedral => build_dihedral(one("m")?)?,
        Family::Heisenberg => build_heisenberg(one("p")?)?,
        Family::Sym => symmetric(one("d")?)?,
        Family::Alt => alternating(one("d")?)?,
        Family::Perm => {
            let parsed = params
                .iter()
                .map(|text| parse_cycles(text))
                .collect::<Result<Vec<_>, _>>()?;
            let degree = parsed.iter().map(|(_, d)| *d).max().unwrap_or(0);
            let gens = parsed
                .iter()
                .map(|(cycles, _)| Permutation::from_cycles(degree, cycles))
                .collect::<Result<Vec<_>, _>>()?;
            build_from_permutations(format!("<{}>", params.join(", ")), &gens)?
        }
        Family::Product => {
            arity(params, 2, "product")?;
            direct_product(&load(Path::new(&params[0]))?, &load(Path::new(&params[1]))?)?
        }
        Family::Table => {
            arity(params, 1, "table")?;
            let g = load(Path::new(&params[0]))?;
            g.validate()?;
            g
        }
    };
    Ok(group)
}

fn build(family: Family, params: &[String], out: Option<&Path>, label: Option<String>) -> Outcome {
    let mut group = build_group(family, params)?;
    if let Some(label) = label {
        group = group.with_label(label);
    }
    let mut text = Vec::new();
    write_cayley_table(&group, &mut text)?;
    emit(&String::from_utf8(text)?, out)
}

fn selected(group: &Group, which: &Which) -> UndirectedGraph {
    if which.full {
        build_undirected(group)
    } else {
        build_punctured(group)
    }
}

fn graph_name(which: &Which) -> &'static str {
    if which.full {
        "full"
    } else {
        "punctured"
    }
}

fn graph(file: &Path, which: &Which, as_json: bool) -> Outcome {
    let group = load(file)?;
    let g = selected(&group, which);
    let degrees: Vec<Value> = (0..g.vertex_count() as u32)
        .map(|v| json!([g.label(v), g.degree(v)]))
        .collect();
    let summary = json!({
        "group": group.label(),
        "order": group.order(),
        "graph": graph_name(which),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "components": connected_components(&g).len(),
        "degrees": degrees,
    });
    if as_json {
        println!("{summary}");
    } else {
        println!("group {}", group.label());
        println!("graph {}", graph_name(which));
        println!("vertices {}", g.vertex_count());
        println!("edges {}", g.edge_count());
        println!("components {}", summary["components"]);
        for v in 0..g.vertex_count() as u32 {
            println!("degree {} {}", g.label(v), g.degree(v));
        }
    }
    Ok(())
}

fn labels_of(g: &UndirectedGraph, vs: &[u32]) -> Vec<u64> {
    vs.iter().map(|&v| g.label(v)).collect()
}

fn edge_lines(edges: &[(u64, u64)]) -> Vec<String> {
    edges.iter().map(|(a, b)| format!("{a} {b}")).collect()
}

/// Verdict, JSON witness and human-readable witness lines.
fn decide(property: Property, group: &Group, g: &UndirectedGraph) -> (bool, Value, Vec<String>) {
    match property {
        Property::Connected => {
            let comps: Vec<Vec<u64>> = connected_components(g)
                .iter()
                .map(|c| labels_of(g, c))
                .collect();
            let lines = if comps.len() > 1 {
                comps
                    .iter()
                    .map(|c| format!("component {}", join(c)))
                    .collect()
            } else {
                Vec::new()
            };
            (comps.len() <= 1, json!({ "components": comps }), lines)
        }
        Property::Bipartite => match is_bipartite(g) {
            Bipartiteness::Bipartite { coloring } => {
                let sides: Vec<Vec<u64>> = (0..2u8)
                    .map(|c| {
                        (0..g.vertex_count() as u32)
                            .filter(|&v| coloring[v as usize] == c)
                            .map(|v| g.label(v))
                            .collect()
                    })
                    .collect();
                let lines = sides.iter().map(|s| format!("side {}", join(s))).collect();
                (true, json!({ "sides": sides }), lines)
            }
            Bipartiteness::OddCycle { cycle } => {
                let cycle = labels_of(g, &cycle);
                let line = format!("odd cycle {}", join(&cycle));
                (false, json!({ "odd_cycle": cycle }), vec![line])
            }
        },
        Property::Planar => match is_planar(g) {
            Ok(Planarity::Planar(embedding)) => {
                let rotation: Vec<Value> = (0..g.vertex_count() as u32)
                    .map(|v| json!([g.label(v), labels_of(g, embedding.rotation(v))]))
                    .collect();
                let lines = (0..g.vertex_count() as u32)
                    .map(|v| {
                        format!(
                            "rotation {}: {}",
                            g.label(v),
                            join(&labels_of(g, embedding.rotation(v)))
                        )
                    })
                    .collect();
                (true, json!({ "rotation": rotation }), lines)
            }
            Ok(Planarity::NonPlanar(w)) => {
                let branch = labels_of(g, &w.branch_vertices);
                let paths: Vec<Vec<u64>> = w.paths.iter().map(|p| labels_of(g, p)).collect();
                let kind = serde_json::to_value(w.kind).expect("serializes");
                let mut lines = vec![format!(
                    "{} subdivision on {}",
                    kind.as_str().unwrap_or_default(),
                    join(&branch)
                )];
                lines.extend(paths.iter().map(|p| format!("path {}", join(p))));
                (
                    false,
                    json!({ "kind": kind, "branch_vertices": branch, "paths": paths }),
                    lines,
                )
            }
            Err(e) => (
                false,
                json!({ "error": e.to_string() }),
                vec![e.to_string()],
            ),
        },
        Property::Eulerian => {
            let odd: Vec<u64> = (0..g.vertex_count() as u32)
                .filter(|&v| g.degree(v) % 2 == 1)
                .map(|v| g.label(v))
                .collect();
            let components = connected_components(g).len();
            let mut lines = Vec::new();
            if !odd.is_empty() {
                lines.push(format!("odd degree {}", join(&odd)));
            }
            if components > 1 {
                lines.push(format!("components {components}"));
            }
            (
                is_eulerian(g),
                json!({ "odd_degree": odd, "components": components }),
                lines,
            )
        }
        Property::Srg => match srg_parameters(g) {
            Ok(params) => (true, json!(params), vec![params.to_string()]),
            Err(refusal) => {
                let mut w = serde_json::to_value(&refusal).expect("serializes");
                for key in ["u", "v"] {
                    if let Some(index) = w[key].as_u64() {
                        w[key] = json!(g.label(index as u32));
                    }
                }
                (false, w.clone(), vec![w.to_string()])
            }
        },
        Property::Bridges => {
            let edges: Vec<(u64, u64)> = find_bridges(g)
                .into_iter()
                .map(|(u, v)| {
                    let (a, b) = (g.label(u), g.label(v));
                    (a.min(b), a.max(b))
                })
                .collect();
            (
                !edges.is_empty(),
                json!({ "bridges": edges }),
                edge_lines(&edges),
            )
        }
        Property::Complete => {
            let missing = (0..g.vertex_count() as u32)
                .flat_map(|u| (u + 1..g.vertex_count() as u32).map(move |v| (u, v)))
                .find(|&(u, v)| !g.has_edge(u, v))
                .map(|(u, v)| (g.label(u), g.label(v)));
            let lines = missing
                .iter()
                .map(|(a, b)| format!("missing {a} {b}"))
                .collect();
            (is_complete(g), json!({ "missing_edge": missing }), lines)
        }
        Property::Tree => {
            let components = connected_components(g).len();
            let w = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "components": components,
            });
            let line = format!(
                "vertices {} edges {} components {components}",
                g.vertex_count(),
                g.edge_count()
            );
            (is_tree(g), w, vec![line])
        }
        Property::Eppo => {
            let bad = group.elements().find(|&x| {
                prime_power(group.element_orders()[x as usize] as u64).is_none()
                    && x != group.identity()
            });
            let lines = bad
                .iter()
                .map(|&x| {
                    format!(
                        "element {x} of order {}",
                        group.element_orders()[x as usize]
                    )
                })
                .collect();
            let w =
                json!({ "element": bad, "order": bad.map(|x| group.element_orders()[x as usize]) });
            (bad.is_none(), w, lines)
        }
    }
}

fn join(items: &[u64]) -> String {
    items
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn check(property: Property, file: &Path, which: &Which, as_json: bool) -> Outcome {
    let group = load(file)?;
    let g = selected(&group, which);
    let (verdict, witness, lines) = decide(property, &group, &g);
    if as_json {
        let name = property.to_possible_value().expect("no skipped variants");
        println!(
            "{}",
            json!({
                "property": name.get_name(),
                "group": group.label(),
                "graph": graph_name(which),
                "verdict": verdict,
                "witness": witness,
            })
        );
    } else {
        println!("{verdict}");
        for line in lines {
            println!("{line}");
        }
    }
    Ok(())
}

fn verify(ids: &[String], max_order: usize, report_path: Option<&Path>) -> Outcome {
    let ids: Vec<&str> = if ids.iter().any(|id| id == "all") {
        if ids.len() > 1 {
            return Err(Failure::Usage(
                "`all` cannot be combined with other ids".into(),
            ));
        }
        Vec::new()
    } else {
        ids.iter().map(String::as_str).collect()
    };
    if max_order < MIN_SWEEP_ORDER && ids.is_empty() {
        return Err(Failure::Usage(format!(
            "--max-order must be at least {MIN_SWEEP_ORDER} for `all`"
        )));
    }
    if let Some(bad) = ids.iter().find(|id| !REGISTRY.iter().any(|t| t.id == **id)) {
        let known: Vec<&str> = REGISTRY.iter().map(|t| t.id).collect();
        return Err(Failure::Usage(format!(
            "unknown theorem id {bad:?}; known ids: {}",
            known.join(", ")
        )));
    }
    let report = run_selected(&ids, max_order, None)?;
    let mut text = report.to_json();
    text.push('\n');
    emit(&text, report_path)?;
    eprintln!(
        "{} passed, {} failed over {} instances",
        report.summary.pass,
        report.summary.fail,
        report.instances.len()
    );
    for f in report.failures() {
        eprintln!(
            "FAIL {} on {}: predicted {} observed {}",
            f.theorem_id, f.group, f.predicted, f.observed
        );
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn export(
    file: &Path,
    format: Format,
    directed: bool,
    punctured: bool,
    out: Option<&Path>,
) -> Outcome {
    let group = load(file)?;
    let name = if punctured {
        format!("P*({})", group.label())
    } else {
        format!("P({})", group.label())
    };
    let text = if directed {
        let d = if punctured {
            build_punctured_directed(&group)
        } else {
            build_directed(&group)
        };
        match format {
            Format::Dot => d.to_dot(&name),
            Format::Edges => d.to_edge_list(),
        }
    } else {
        let g = if punctured {
            build_punctured(&group)
        } else {
            build_undirected(&group)
        };
        match format {
            Format::Dot => g.to_dot(&name),
            Format::Edges => g.to_edge_list(),
        }
    };
    emit(&text, out)
}
