//! `morita-gis`: validate finite inverse semigroups, decide whether they are
//! Morita equivalent to a graph inverse semigroup, and check the constructions
//! behind the verdict.
//!
//! Exit codes: 0 success or YES, 1 a principled NO, 2 a failed verification
//! or an invalid semigroup, 3 an input error.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use morita_gis::category::{
    build_equivalence_functor_with, karoubi, left_category, p_equivalent_to_l, path_category, EquivalenceError, PEquivalenceError,
};
use morita_gis::gamma::{check_morita_to_graph_with, GammaGraph, MoritaVerdict, RepresentativePolicy};
use morita_gis::graph::{build_gis, graph_isomorphism_with_limit, parse_graph, write_graph, DirectedGraph, GraphError};
use morita_gis::semigroup::{
    generate_from_partial_bijections, parse_generators, parse_names, parse_table, validate, GenerationOptions, MultiplicationTable,
    ValidatedSemigroup,
};
use morita_gis::semilattice::{build_poset, perrot_report_for, PerrotWitness};
use morita_gis::{Exec, DEFAULT_SEARCH_LIMIT};

#[derive(Parser, Debug)]
#[command(name = "morita-gis", version, about = "Morita equivalence of finite inverse semigroups and graph inverse semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Include DOT output in the report.
    #[arg(long, global = true)]
    dot: bool,
    /// Which idempotent represents each D-class.
    #[arg(long, value_enum, default_value_t = Rep::Min, global = true)]
    rep: Rep,
    /// Keep the zero object in the C(S) and L(S) sizes reported by `analyze`.
    #[arg(long, global = true)]
    include_zero_object: bool,
    /// Step budget for isomorphism searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    bound: Option<u64>,
    /// Element names, one per line (defaults to a sibling `.names` file).
    #[arg(long, global = true)]
    names: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a table or generator file defines an inverse semigroup.
    Validate { input: PathBuf },
    /// Decide Morita equivalence to a graph inverse semigroup and print Γ_S.
    CheckMorita { input: PathBuf },
    /// Rebuild a graph from its graph inverse semigroup and compare.
    Roundtrip { graph: PathBuf },
    /// Build the equivalence functor C(T) -> C(S) and check it.
    VerifyFunctor { input: PathBuf },
    /// Green's relations, idempotent poset and category sizes.
    Analyze { input: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Rep {
    Min,
    Max,
}

impl From<Rep> for RepresentativePolicy {
    fn from(r: Rep) -> Self {
        match r {
            Rep::Min => RepresentativePolicy::MinIndex,
            Rep::Max => RepresentativePolicy::MaxIndex,
        }
    }
}

const EXIT_NO: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_INPUT: u8 = 3;

/// What a command produced: a report, optional DOT, and an exit code.
struct Outcome {
    report: Value,
    dot: Option<String>,
    code: u8,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.report).expect("reports serialize")),
                Format::Text => print!("{}", render::to_text(&outcome.report)),
                Format::Dot => match &outcome.dot {
                    Some(dot) => print!("{dot}"),
                    None => {
                        eprint!("{}", render::to_text(&outcome.report));
                        if outcome.code == 0 {
                            eprintln!("error: no DOT output for this command");
                            return ExitCode::from(EXIT_INPUT);
                        }
                    }
                },
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let policy = RepresentativePolicy::from(cli.rep);
    match &cli.command {
        Command::Validate { input } => cmd_validate(input, cli),
        Command::CheckMorita { input } => {
            let s = load_valid(input, cli)?;
            Ok(cmd_check_morita(&s, policy, cli.dot))
        }
        Command::Roundtrip { graph } => cmd_roundtrip(graph, policy, cli),
        Command::VerifyFunctor { input } => {
            let s = load_valid(input, cli)?;
            Ok(cmd_verify_functor(&s, policy, cli.dot))
        }
        Command::Analyze { input } => {
            let s = load_valid(input, cli)?;
            Ok(cmd_analyze(&s, policy, cli))
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn is_graph_file(path: &Path) -> bool {
    matches!(path.extension().and_then(|e| e.to_str()), Some("graph" | "dot" | "gv"))
}

fn load_graph(path: &Path) -> Result<DirectedGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Tables (`.tbl` or anything unrecognised), generator files (`.gen`), or
/// graphs (`.graph`, `.dot`, `.gv`, read as `S(Γ)`).
fn load_table(path: &Path, cli: &Cli) -> Result<MultiplicationTable, Failure> {
    let ext = path.extension().and_then(|e| e.to_str());
    let table = if ext == Some("gen") {
        let file = parse_generators(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        generate_from_partial_bijections(file.domain_size, &file.generators, GenerationOptions::default())
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
            .table
    } else if is_graph_file(path) {
        let g = load_graph(path)?;
        build_gis(&g).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?.semigroup.table().clone()
    } else {
        parse_table(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    };
    let names_path = match &cli.names {
        Some(p) => Some(p.clone()),
        None => Some(path.with_extension("names")).filter(|p| p.is_file() && ext != Some("names")),
    };
    match names_path {
        Some(p) => {
            let names = parse_names(&read(&p)?, table.len()).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
            table.with_names(names).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        None => Ok(table),
    }
}

fn load_valid(path: &Path, cli: &Cli) -> Result<ValidatedSemigroup, Failure> {
    let table = load_table(path, cli)?;
    validate(table).map_err(|violations| {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Failure { code: EXIT_VERIFY, message: format!("not an inverse semigroup: {}", list.join("; ")) }
    })
}

fn names(s: &ValidatedSemigroup, elems: impl IntoIterator<Item = usize>) -> Vec<String> {
    elems.into_iter().map(|e| s.name(e)).collect()
}

fn cmd_validate(path: &Path, cli: &Cli) -> Result<Outcome, Failure> {
    let table = load_table(path, cli)?;
    let size = table.len();
    match validate(table) {
        Ok(s) => {
            let green = s.green_data();
            let report = json!({
                "command": "validate",
                "valid": true,
                "size": size,
                "idempotents": s.idempotents().len(),
                "zero": s.zero().map(|z| s.name(z)),
                "zero_index": s.zero(),
                "combinatorial": s.is_combinatorial(),
                "d_classes": green.d_class_count(),
                "h_classes": green.h_class_count(),
            });
            Ok(Outcome { report, dot: None, code: 0 })
        }
        Err(violations) => {
            let report = json!({
                "command": "validate",
                "valid": false,
                "size": size,
                "violations": violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Ok(Outcome { report, dot: None, code: EXIT_VERIFY })
        }
    }
}

fn gamma_json(s: &ValidatedSemigroup, gamma: &GammaGraph) -> Value {
    let g = &gamma.graph;
    let vertices: Vec<Value> = g
        .vertices()
        .map(|v| json!({ "name": g.vertex_name(v), "representative": s.name(gamma.representative[v.0]) }))
        .collect();
    let edges: Vec<Value> = g
        .edges()
        .map(|e| {
            json!({
                "name": g.edge_name(e),
                "source": g.vertex_name(g.src(e)),
                "range": g.vertex_name(g.rng(e)),
                "cover": s.name(gamma.edge_data[e.0].1),
            })
        })
        .collect();
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "vertex_list": vertices,
        "edge_list": edges,
        "graph_text": write_graph(g),
    })
}

fn verdict_json(s: &ValidatedSemigroup, verdict: &MoritaVerdict) -> Value {
    let reasons: Vec<Value> = verdict
        .reasons()
        .iter()
        .map(|r| json!({ "code": r.code.as_str(), "witness": names(s, r.witness.iter().copied()) }))
        .collect();
    json!(reasons)
}

fn cmd_check_morita(s: &ValidatedSemigroup, policy: RepresentativePolicy, with_dot: bool) -> Outcome {
    let verdict = check_morita_to_graph_with(s, policy);
    let mut report = Map::new();
    report.insert("command".into(), json!("check-morita"));
    report.insert("size".into(), json!(s.len()));
    match &verdict {
        MoritaVerdict::Yes(gamma) => {
            let dot = gamma.to_dot();
            report.insert("verdict".into(), json!("YES"));
            report.insert("gamma".into(), gamma_json(s, gamma));
            if with_dot {
                report.insert("dot".into(), json!(dot));
            }
            Outcome { report: Value::Object(report), dot: Some(dot), code: 0 }
        }
        MoritaVerdict::No(_) => {
            report.insert("verdict".into(), json!("NO"));
            report.insert("reasons".into(), verdict_json(s, &verdict));
            Outcome { report: Value::Object(report), dot: None, code: EXIT_NO }
        }
    }
}

fn cmd_roundtrip(path: &Path, policy: RepresentativePolicy, cli: &Cli) -> Result<Outcome, Failure> {
    let g = load_graph(path)?;
    let gis = build_gis(&g).map_err(|e| match e {
        GraphError::NotAcyclic => Failure::input(format!("{}: graph is not acyclic", path.display())),
        e => Failure::input(format!("{}: {e}", path.display())),
    })?;
    let s = &gis.semigroup;
    let gamma = match check_morita_to_graph_with(s, policy) {
        MoritaVerdict::Yes(gamma) => gamma,
        verdict => {
            let report = json!({
                "command": "roundtrip",
                "semigroup_size": s.len(),
                "verdict": "NO",
                "reasons": verdict_json(s, &verdict),
            });
            return Ok(Outcome { report, dot: None, code: EXIT_VERIFY });
        }
    };
    let limit = cli.bound.map_or(DEFAULT_SEARCH_LIMIT, |b| b as usize);
    let mut report = Map::new();
    report.insert("command".into(), json!("roundtrip"));
    report.insert("graph_vertices".into(), json!(g.vertex_count()));
    report.insert("graph_edges".into(), json!(g.edge_count()));
    report.insert("semigroup_size".into(), json!(s.len()));
    report.insert("gamma_vertices".into(), json!(gamma.graph.vertex_count()));
    report.insert("gamma_edges".into(), json!(gamma.graph.edge_count()));
    let code = match graph_isomorphism_with_limit(&gamma.graph, &g, limit) {
        Ok(Some(iso)) => {
            let h = &gamma.graph;
            let vmap: Vec<String> = h
                .vertices()
                .map(|v| format!("{} -> {}", h.vertex_name(v), g.vertex_name(iso.vertex_map[v.0])))
                .collect();
            let emap: Vec<String> =
                h.edges().map(|e| format!("{} -> {}", h.edge_name(e), g.edge_name(iso.edge_map[e.0]))).collect();
            report.insert("isomorphic".into(), json!(true));
            report.insert("vertex_map".into(), json!(vmap));
            report.insert("edge_map".into(), json!(emap));
            0
        }
        Ok(None) => {
            report.insert("isomorphic".into(), json!(false));
            EXIT_VERIFY
        }
        Err(e) => {
            report.insert("isomorphic".into(), Value::Null);
            report.insert("error".into(), json!(e.to_string()));
            EXIT_VERIFY
        }
    };
    let dot = gamma.to_dot();
    if cli.dot {
        report.insert("dot".into(), json!(dot));
    }
    Ok(Outcome { report: Value::Object(report), dot: Some(dot), code })
}

fn cmd_verify_functor(s: &ValidatedSemigroup, policy: RepresentativePolicy, with_dot: bool) -> Outcome {
    let mut report = Map::new();
    report.insert("command".into(), json!("verify-functor"));
    report.insert("size".into(), json!(s.len()));
    let eq = match build_equivalence_functor_with(s, policy, Exec::default()) {
        Ok(eq) => eq,
        Err(EquivalenceError::NotMoritaGraphType(reasons)) => {
            report.insert("verdict".into(), json!("NO"));
            report.insert("reasons".into(), verdict_json(s, &MoritaVerdict::No(reasons)));
            return Outcome { report: Value::Object(report), dot: None, code: EXIT_NO };
        }
        Err(e) => {
            report.insert("error".into(), json!(e.to_string()));
            return Outcome { report: Value::Object(report), dot: None, code: EXIT_VERIFY };
        }
    };
    let check = eq.check();
    report.insert("gis_size".into(), json!(eq.gis.semigroup.len()));
    report.insert("gamma_vertices".into(), json!(eq.gamma.graph.vertex_count()));
    report.insert("gamma_edges".into(), json!(eq.gamma.graph.edge_count()));
    report.insert(
        "source".into(),
        json!({ "objects": eq.source.category.object_count(), "morphisms": eq.source.category.morphism_count() }),
    );
    report.insert(
        "target".into(),
        json!({ "objects": eq.target.category.object_count(), "morphisms": eq.target.category.morphism_count() }),
    );
    report.insert("functorial".into(), json!(check.functorial));
    report.insert("faithful".into(), json!(check.faithful));
    report.insert("full".into(), json!(check.full));
    report.insert("essentially_surjective".into(), json!(check.essentially_surjective));
    report.insert("witnesses".into(), serde_json::to_value(&check.witnesses).expect("witnesses serialize"));
    let dot = eq.gamma.to_dot();
    if with_dot {
        report.insert("dot".into(), json!(dot));
    }
    let code = if check.is_equivalence() { 0 } else { EXIT_VERIFY };
    Outcome { report: Value::Object(report), dot: Some(dot), code }
}

fn perrot_witness_json(s: &ValidatedSemigroup, w: &PerrotWitness) -> Value {
    match *w {
        PerrotWitness::P1 { e, f } => json!({ "property": "P1", "elements": names(s, [e, f]) }),
        PerrotWitness::P1Local { e, f, g } => json!({ "property": "P1_LOCAL", "elements": names(s, [e, f, g]) }),
        PerrotWitness::P3 { e, maximal: (a, b) } => json!({ "property": "P3", "elements": names(s, [e, a, b]) }),
        PerrotWitness::P4 { d_class, e } => json!({ "property": "P4", "d_class": d_class, "elements": names(s, [e]) }),
        PerrotWitness::Proper { d_class, maximal: (a, b) } => {
            json!({ "property": "PROPER", "d_class": d_class, "elements": names(s, [a, b]) })
        }
    }
}

fn cmd_analyze(s: &ValidatedSemigroup, policy: RepresentativePolicy, cli: &Cli) -> Outcome {
    let green = s.green_data();
    let mut report = Map::new();
    report.insert("command".into(), json!("analyze"));
    report.insert("size".into(), json!(s.len()));
    report.insert("elements".into(), json!(names(s, s.elements())));
    report.insert("idempotents".into(), json!(names(s, s.idempotents().iter().copied())));
    report.insert("zero".into(), json!(s.zero().map(|z| s.name(z))));
    report.insert("combinatorial".into(), json!(s.is_combinatorial()));
    let d_classes: Vec<Value> = (0..green.d_class_count())
        .map(|c| {
            let members = green.d_class(c);
            let idempotents: Vec<usize> = members.iter().copied().filter(|&x| s.is_idempotent(x)).collect();
            json!({ "elements": names(s, members), "idempotents": names(s, idempotents) })
        })
        .collect();
    let count = |p: &[usize]| p.iter().max().map_or(0, |m| m + 1);
    report.insert(
        "green".into(),
        json!({
            "l_classes": count(&green.l),
            "r_classes": count(&green.r),
            "h_classes": green.h_class_count(),
            "d_classes": d_classes,
        }),
    );

    let mut dot = None;
    match build_poset(s) {
        Ok(poset) => {
            let p = perrot_report_for(s, &poset);
            let witnesses: Vec<Value> = p.witnesses.iter().map(|w| perrot_witness_json(s, w)).collect();
            report.insert(
                "perrot".into(),
                json!({
                    "p1": p.p1,
                    "p1_local": p.p1_local,
                    "p2": p.p2,
                    "p2_local": p.p2_local,
                    "p3": p.p3,
                    "p4": p.p4,
                    "proper": p.proper,
                    "witnesses": witnesses,
                }),
            );
            report.insert(
                "covers".into(),
                json!(poset.cover_pairs().iter().map(|&(f, e)| format!("{} << {}", s.name(f), s.name(e))).collect::<Vec<_>>()),
            );
            dot = Some(poset.to_dot(s));
        }
        Err(e) => {
            report.insert("perrot".into(), json!(e.to_string()));
        }
    }

    let include = cli.include_zero_object;
    let c = karoubi(s, include);
    let l = left_category(s, include);
    let mut cats = Map::new();
    cats.insert("include_zero_object".into(), json!(include));
    cats.insert("karoubi".into(), json!({ "objects": c.category.object_count(), "morphisms": c.category.morphism_count() }));
    cats.insert("left".into(), json!({ "objects": l.category.object_count(), "morphisms": l.category.morphism_count() }));
    match path_category(s) {
        Ok(p) => {
            let arrows: Vec<String> =
                p.triples.iter().map(|t| format!("({},{}) : {} -> {}", s.name(t.cod), s.name(t.elem), s.name(t.dom), s.name(t.cod))).collect();
            cats.insert(
                "path".into(),
                json!({ "objects": p.category.object_count(), "morphisms": p.category.morphism_count(), "arrows": arrows }),
            );
        }
        Err(e) => {
            cats.insert("path".into(), json!(e.to_string()));
        }
    }
    report.insert("categories".into(), Value::Object(cats));
    let p_eq = match p_equivalent_to_l(s) {
        Ok(p) => json!(p.holds()),
        Err(e @ (PEquivalenceError::NoZero | PEquivalenceError::P3Fails(_) | PEquivalenceError::P4Fails { .. })) => {
            json!(format!("not applicable: {e}"))
        }
    };
    report.insert("p_equivalent_to_l".into(), p_eq);
    let verdict = check_morita_to_graph_with(s, policy);
    report.insert("morita".into(), json!(if verdict.is_yes() { "YES" } else { "NO" }));
    report.insert("reasons".into(), verdict_json(s, &verdict));
    if cli.dot {
        report.insert("dot".into(), json!(dot.clone()));
    }
    Outcome { report: Value::Object(report), dot, code: 0 }
}
