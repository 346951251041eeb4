use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use bipramsey::analysis;
use bipramsey::balanced::{self, TraceStep};
use bipramsey::certificate::{self, Certificate};
use bipramsey::constructions::{self, BlowUpSpec};
use bipramsey::search::{self, SearchStatus, UpperCertificate};
use bipramsey::{BipartiteColoring, CompleteColoring};

use crate::report::{describe_component, vertex_list, CliError, CommandReport, Status};
use crate::{Cli, Command, Construction};

type Outcome = Result<(), CliError>;

pub fn run(cli: &Cli) -> CommandReport {
    let (name, parameters) = describe(cli);
    let mut report = CommandReport::new(name, parameters);
    let result = match &cli.command {
        Command::Analyze { file } => analyze(cli, file, &mut report),
        Command::Balanced { file } => balanced_cmd(cli, file, &mut report),
        Command::Search { m, n, r, count_iso } => search_cmd(cli, *m, *n, *r, *count_iso, &mut report),
        Command::Construct { kind } => construct(cli, kind, &mut report),
        Command::Verify { file, certificate } => verify(file, certificate, &mut report),
        Command::StarArboricity { m, n } => star_arboricity(cli, *m, *n, &mut report),
        Command::RamseyF { r } => ramsey_f(cli, *r, &mut report),
    };
    match result {
        Ok(()) => report,
        Err(e) => report.fail(&e),
    }
}

fn describe(cli: &Cli) -> (&'static str, Value) {
    let search = json!({
        "budget": cli.budget,
        "workers": cli.workers.max(1),
        "symmetry": cli.search_options().symmetry,
    });
    match &cli.command {
        Command::Analyze { file } => ("analyze", json!({ "file": file })),
        Command::Balanced { file } => ("balanced", json!({ "file": file })),
        Command::Search { m, n, r, count_iso } => {
            ("search", json!({ "m": m, "n": n, "r": r, "count_iso": count_iso, "search": search }))
        }
        Command::Construct { kind } => {
            let params = match kind {
                Construction::Figure1 => json!({ "kind": "figure1" }),
                Construction::Extremal { r } => json!({ "kind": "extremal", "r": r }),
                Construction::Blowup { base, k } => json!({ "kind": "blowup", "base": base, "k": k }),
                Construction::Biequiv { m, n } => json!({ "kind": "biequiv", "m": m, "n": n }),
                Construction::CompleteStar { r } => json!({ "kind": "complete-star", "r": r }),
                Construction::Double { r } => json!({ "kind": "double", "r": r }),
            };
            ("construct", params)
        }
        Command::Verify { file, certificate } => ("verify", json!({ "file": file, "certificate": certificate })),
        Command::StarArboricity { m, n } => ("star-arboricity", json!({ "m": m, "n": n, "search": search })),
        Command::RamseyF { r } => ("ramsey-f", json!({ "r": r, "search": search })),
    }
}

fn read_coloring(path: &Path) -> Result<BipartiteColoring, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::error(format!("cannot read {}: {e}", path.display())))?;
    BipartiteColoring::parse(&text).map_err(|e| CliError::error(format!("{}: {e}", path.display())))
}

fn write_out(cli: &Cli, contents: &str, report: &mut CommandReport) -> Outcome {
    if let Some(path) = &cli.out {
        fs::write(path, contents).map_err(|e| CliError::error(format!("cannot write {}: {e}", path.display())))?;
        report.line(format!("written to {}", path.display()));
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn analyze(cli: &Cli, file: &Path, report: &mut CommandReport) -> Outcome {
    let c = read_coloring(file)?;
    let components = analysis::monochromatic_components(&c, false);
    let stats = analysis::color_class_stats(&c);
    let largest = analysis::largest_component(&c);
    let matching = analysis::max_connected_matching(&c);
    let p4 = analysis::find_p4(&c);
    let biequivalence = analysis::is_biequivalence(&c);
    let biclique = analysis::largest_mono_biclique(&c);

    report.line(format!("K_{{{},{}}} with {} colors", c.m(), c.n(), c.r()));
    for s in &stats {
        let nontrivial = components.iter().filter(|comp| comp.color == s.color).count();
        report.line(format!(
            "color {}: {} edges, {} nontrivial components, {} components with singletons, star forest: {}",
            s.color,
            s.edge_count,
            nontrivial,
            s.component_count,
            if s.is_star_forest { "yes" } else { "no" }
        ));
        for comp in components.iter().filter(|comp| comp.color == s.color) {
            report.line(format!("  {}", describe_component(comp)));
        }
    }
    report.line(format!("largest component: {}", describe_component(&largest)));
    let edges: Vec<String> = matching.edges.iter().map(|&(x, y)| format!("A{}B{}", x + 1, y + 1)).collect();
    report.line(format!(
        "largest connected matching: size {} in color {}: {}",
        matching.size(),
        matching.color,
        edges.join(" ")
    ));
    match &p4 {
        Some(w) => report.line(format!(
            "monochromatic P4 in color {}: A{} B{} A{} B{}",
            w.color,
            w.x1 + 1,
            w.y1 + 1,
            w.x2 + 1,
            w.y2 + 1
        )),
        None => report.line("no monochromatic P4"),
    }
    report.line(format!("bi-equivalence: {}", if biequivalence { "yes" } else { "no" }));
    match &biclique {
        Some(b) => report.line(format!(
            "largest monochromatic biclique: {}x{} ({})",
            b.x_vertices.len(),
            b.y_vertices.len(),
            describe_component(b)
        )),
        None => report.line("largest monochromatic biclique: none"),
    }

    report.payload = json!({
        "m": c.m(),
        "n": c.n(),
        "r": c.r(),
        "components": to_value(&components),
        "color_classes": to_value(&stats),
        "largest_component": to_value(&largest),
        "max_connected_matching": to_value(&matching),
        "p4": to_value(&p4),
        "biequivalence": biequivalence,
        "largest_biclique": to_value(&biclique),
    });
    let cert = match p4 {
        Some(w) => Certificate::P4(w),
        None => Certificate::Matching(matching),
    };
    write_out(cli, &cert.to_json(), report)
}

fn describe_step(step: &TraceStep) -> String {
    let sets = |x: &[usize], y: &[usize]| format!("{} | {}", vertex_list('A', x), vertex_list('B', y));
    match step {
        TraceStep::WholeGraph { color } => format!("one color ({color}): the whole graph"),
        TraceStep::EnterScope { x, y } => format!("enter sub-biclique [{}]", sets(x, y)),
        TraceStep::ExitScope => "leave sub-biclique".to_string(),
        TraceStep::Largest { color, x, y } => format!("largest component, color {color}: {}", sets(x, y)),
        TraceStep::Adequate => "largest component meets both thresholds".to_string(),
        TraceStep::SwapSides => "deficient side is X: exchange the roles of the sides".to_string(),
        TraceStep::Biclique { role, color, x, y } => {
            format!("{role:?} biclique monochromatic in color {color}: {}", sets(x, y))
        }
        TraceStep::Component { role, color, x, y } => format!("{role:?} component, color {color}: {}", sets(x, y)),
        TraceStep::Selected { color, x, y } => format!("selected in scope, color {color}: {}", sets(x, y)),
        TraceStep::Result { color, x, y } => format!("result, color {color}: {}", sets(x, y)),
    }
}

fn balanced_cmd(cli: &Cli, file: &Path, report: &mut CommandReport) -> Outcome {
    let c = read_coloring(file)?;
    let scan = balanced::brute_force_balanced(&c);
    if c.r() <= 3 {
        let w = balanced::find_balanced_component(&c).map_err(|e| CliError::error(e.to_string()))?;
        balanced::verify_balanced(&c, &w)
            .map_err(|e| CliError::error(format!("witness failed its own check: {}: {}", e.invariant, e.detail)))?;
        report.line(format!(
            "balanced component, color {}: {} | {}",
            w.color,
            vertex_list('A', &w.x_set),
            vertex_list('B', &w.y_set)
        ));
        report.line(format!(
            "{}*{} >= {} and {}*{} >= {}",
            c.r(),
            w.x_set.len(),
            c.m(),
            c.r(),
            w.y_set.len(),
            c.n()
        ));
        report.line("trace:");
        for step in &w.trace {
            report.line(format!("  {}", describe_step(step)));
        }
        report.payload = json!({ "bar_met": true, "witness": to_value(&w), "oracle_score": scan.score });
        write_out(cli, &Certificate::Balanced(w).to_json(), report)
    } else {
        report.line(format!("{} colors: the finder covers at most 3, scanning every component", c.r()));
        report.line(format!("best component: {}", describe_component(&scan.best)));
        report.line(format!(
            "best intersection with both sides: {}; bar {}*|x| >= {} and {}*|y| >= {} {}",
            scan.max_min_side,
            c.r(),
            c.m(),
            c.r(),
            c.n(),
            if scan.satisfied { "met" } else { "NOT met" }
        ));
        if !scan.satisfied {
            report.status = Status::NotFound;
        }
        report.payload = json!({
            "bar_met": scan.satisfied,
            "best": to_value(&scan.best),
            "score": scan.score,
            "max_min_side": scan.max_min_side,
        });
        write_out(cli, &Certificate::Component(scan.best).to_json(), report)
    }
}

fn search_cmd(cli: &Cli, m: usize, n: usize, r: usize, count_iso: bool, report: &mut CommandReport) -> Outcome {
    let opts = cli.search_options();
    if count_iso {
        let count = search::count_p4free_iso_classes(m, n, r, &opts)?;
        report.line(format!("P4-free {r}-colorings of K_{{{m},{n}}} up to isomorphism: {}", count.count));
        report.line(format!(
            "complete colorings visited: {}, nodes: {}, symmetry: {}",
            count.colorings_visited, count.nodes_explored, count.symmetry_mode
        ));
        for (i, class) in count.classes.iter().enumerate() {
            report.line(format!("class {}:", i + 1));
            for line in class.to_text().lines() {
                report.line(format!("  {line}"));
            }
        }
        let body: Vec<String> = count.classes.iter().map(BipartiteColoring::to_text).collect();
        report.payload = to_value(&count);
        return write_out(cli, &body.join("\n"), report);
    }
    let outcome = search::exists_p4free(m, n, r, &opts)?;
    match outcome.status {
        SearchStatus::Found => report.line(format!("FOUND: a P4-free {r}-coloring of K_{{{m},{n}}}")),
        SearchStatus::Exhausted => {
            report.status = Status::NotFound;
            report.line(format!("EXHAUSTED: every {r}-coloring of K_{{{m},{n}}} has a monochromatic P4"));
        }
    }
    report.line(format!("nodes: {}, symmetry: {}", outcome.nodes_explored, outcome.symmetry_mode));
    if outcome.status == SearchStatus::Exhausted {
        report.line("pruning rules relied upon:");
        for rule in &outcome.pruning_rules {
            report.line(format!("  {rule}"));
        }
    }
    if let Some(w) = &outcome.witness {
        for line in w.to_text().lines() {
            report.line(format!("  {line}"));
        }
        write_out(cli, &w.to_text(), report)?;
    }
    report.payload = to_value(&outcome);
    Ok(())
}

fn complete_text(g: &CompleteColoring) -> String {
    let mut out = format!("{} {}\n", g.t(), g.s());
    for i in 0..g.t() {
        let row: Vec<String> =
            (0..g.t()).map(|j| if i == j { "-".to_string() } else { g.color(i, j).to_string() }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn named_base(base: &str) -> Result<BipartiteColoring, CliError> {
    match base {
        "figure1" => Ok(constructions::figure1_k55()),
        "k33" => Ok(constructions::one_factorization_k33()),
        path => read_coloring(Path::new(path)),
    }
}

fn construct(cli: &Cli, kind: &Construction, report: &mut CommandReport) -> Outcome {
    let err = |e: bipramsey::error::ConstructionError| CliError::error(e.to_string());
    if let Construction::CompleteStar { r } = kind {
        let g = constructions::complete_star_coloring(*r).map_err(err)?;
        let text = complete_text(&g);
        if cli.out.is_none() {
            report.lines.extend(text.lines().map(str::to_string));
        }
        report.line(format!("K_{} with {} colors", g.t(), g.s()));
        let classes: Vec<Value> = (0..g.s()).map(|c| json!({ "color": c, "edges": g.class_edges(c) })).collect();
        report.payload = json!({ "t": g.t(), "s": g.s(), "classes": classes });
        return write_out(cli, &text, report);
    }
    let (c, claims_p4_free) = match kind {
        Construction::Figure1 => (constructions::figure1_k55(), true),
        Construction::Extremal { r } => (constructions::extremal_p4free(*r).map_err(err)?, true),
        Construction::Double { r } => {
            (constructions::bipartite_double(&constructions::complete_star_coloring(*r).map_err(err)?), true)
        }
        Construction::Blowup { base, k } => {
            let base = named_base(base)?;
            (constructions::blow_up(&BlowUpSpec::uniform(base, *k)).map_err(err)?.coloring, false)
        }
        Construction::Biequiv { m, n } => (constructions::biequivalence_sharpness(*m, *n).map_err(err)?.coloring, false),
        Construction::CompleteStar { .. } => unreachable!("handled above"),
    };
    if cli.out.is_none() {
        report.lines.extend(c.to_text().lines().map(str::to_string));
    }
    report.line(format!("K_{{{},{}}} with {} colors", c.m(), c.n(), c.r()));
    let p4_free = analysis::find_p4(&c).is_none();
    if claims_p4_free {
        if !p4_free {
            return Err(CliError::error("construction has a monochromatic P4"));
        }
        report.line("validated: no monochromatic P4");
    }
    let mut payload = json!({ "m": c.m(), "n": c.n(), "r": c.r(), "p4_free": p4_free, "coloring": to_value(&c) });
    if let Construction::Biequiv { .. } = kind {
        let biequivalence = analysis::is_biequivalence(&c);
        let biclique = analysis::largest_mono_biclique(&c);
        report.line(format!("bi-equivalence: {}", if biequivalence { "yes" } else { "no" }));
        if let Some(b) = &biclique {
            report.line(format!("largest monochromatic biclique: {}x{}", b.x_vertices.len(), b.y_vertices.len()));
        }
        payload["biequivalence"] = json!(biequivalence);
        payload["largest_biclique"] = to_value(&biclique);
    }
    report.payload = payload;
    write_out(cli, &c.to_text(), report)
}

fn verify(file: &Path, cert_path: &Path, report: &mut CommandReport) -> Outcome {
    let c = read_coloring(file)?;
    let text = fs::read_to_string(cert_path)
        .map_err(|e| CliError::error(format!("cannot read {}: {e}", cert_path.display())))?;
    let cert =
        Certificate::from_json(&text).map_err(|e| CliError::error(format!("{}: {e}", cert_path.display())))?;
    match certificate::verify(&c, &cert) {
        Ok(()) => {
            report.line(format!("{} certificate valid", cert.kind()));
            report.payload = json!({ "kind": cert.kind(), "valid": true });
            Ok(())
        }
        Err(e) => Err(CliError::error(format!(
            "{} certificate rejected: invariant \"{}\" fails: {}",
            cert.kind(),
            e.invariant,
            e.detail
        ))),
    }
}

fn star_arboricity(cli: &Cli, m: usize, n: usize, report: &mut CommandReport) -> Outcome {
    let result = search::star_arboricity(m, n, &cli.search_options())?;
    report.line(format!("st(K_{{{m},{n}}}) = {}", result.value));
    match &result.exhaustion {
        Some(ex) => report.line(format!("{} colors exhausted after {} nodes", ex.r, ex.nodes_explored)),
        None => report.line("one color: nothing to exhaust"),
    }
    for line in result.witness.to_text().lines() {
        report.line(format!("  {line}"));
    }
    write_out(cli, &result.witness.to_text(), report)?;
    report.payload = to_value(&result);
    Ok(())
}

fn ramsey_f(cli: &Cli, r: usize, report: &mut CommandReport) -> Outcome {
    let result = search::bipartite_ramsey_f(r, &cli.search_options())?;
    match (&result.value, &result.upper) {
        (Some(v), UpperCertificate::Exhausted { outcome, .. }) => {
            report.line(format!("f({r}) = {v}"));
            report.line(format!("K_{{{v},{v}}} exhausted after {} nodes", outcome.nodes_explored));
        }
        (_, UpperCertificate::Unknown { size, nodes }) => {
            report.status = Status::BudgetExceeded;
            report.line(format!("f({r}) >= {}; search at K_{{{size},{size}}} ran out after {nodes} nodes", result.lower_bound));
        }
        _ => unreachable!("a value is reported exactly when the upper side is exhausted"),
    }
    let size = result.lower_bound - 1;
    report.line(format!("witness for K_{{{size},{size}}} ({:?}):", result.witness_source));
    for line in result.witness.to_text().lines() {
        report.line(format!("  {line}"));
    }
    write_out(cli, &result.witness.to_text(), report)?;
    report.payload = to_value(&result);
    Ok(())
}
