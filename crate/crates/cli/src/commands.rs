use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;

use serde_json::{json, Value};

use scpoly::census::{q_classes_with, verify_q_unique, CensusOptions, QClassTable, DEFAULT_CENSUS_ORDER};
use scpoly::classic::{characteristic_poly, compare_powers, matching_poly, tutte_of_graph};
use scpoly::families::{make, FamilySpec};
use scpoly::invariants::full_report_with;
use scpoly::qpoly::{compute_q, MethodChoice, QConfig};
use scpoly::{parse_graph, to_graph6, with_workers, Error, Graph};

use crate::{CensusFlags, Command, Format, GraphInput, MethodArg, PolyKind, QFlags};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

const USAGE: u8 = 1;
const MALFORMED: u8 = 2;
const RESOURCE: u8 = 3;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } | Error::OrderTooLarge { .. } => RESOURCE,
            Error::InvalidParameter(_) => USAGE,
            _ => MALFORMED,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: MALFORMED,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Compute { input, poly, q, format } => {
            let config = q_config(&q);
            for_each_graph(&input, |g| {
                let line = compute(g, poly, &config, q.workers, format)?;
                println!("{line}");
                Ok(())
            })
        }
        Command::Invariants { input, q, format } => {
            let config = q_config(&q);
            for_each_graph(&input, |g| {
                let report = with_workers(q.workers, || full_report_with(g, &config))??;
                match format {
                    Format::Json => {
                        let mut v = serde_json::to_value(&report).expect("serializable");
                        v["graph6"] = json!(to_graph6(g));
                        println!("{v}");
                    }
                    Format::Text => print!("{}", invariants_text(g, &report)),
                }
                Ok(())
            })
        }
        Command::Compare { a, b, format } => {
            let (g, h) = (parse_graph(&a)?, parse_graph(&b)?);
            let cmp = compare_powers(&g, &h);
            let word = |eq: bool| if eq { "equal" } else { "different" };
            let rows = [
                ("Q", cmp.q_equal),
                ("charpoly", cmp.charpoly_equal),
                ("matching", cmp.matching_equal),
                ("tutte", cmp.tutte_equal),
            ];
            match format {
                Format::Json => {
                    let v: serde_json::Map<String, Value> =
                        rows.iter().map(|&(k, eq)| (k.to_lowercase(), json!(word(eq)))).collect();
                    println!("{}", Value::Object(v));
                }
                Format::Text => {
                    for (k, eq) in rows {
                        println!("{k}: {}", word(eq));
                    }
                }
            }
            Ok(())
        }
        Command::Family { name, params, format } => {
            let spec = FamilySpec::from_name(&name, &params)?;
            let g = make(&spec)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({"family": spec.to_string(), "graph6": to_graph6(&g), "order": g.order(), "size": g.size()})
                ),
                Format::Text => println!("{}", to_graph6(&g)),
            }
            Ok(())
        }
        Command::Census {
            order,
            group_by: _,
            output,
            census,
            format,
        } => {
            let table = census_table(order, &census)?;
            match &output {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path).map_err(|e| file_error(path, e))?);
                    table.write_census(&mut w)?;
                    w.flush()?;
                }
                None => table.write_census(io::stdout().lock())?,
            }
            let summary = census_summary(&table, format);
            if output.is_some() {
                print!("{summary}");
            } else {
                eprint!("{summary}");
            }
            Ok(())
        }
        Command::VerifyUnique { input, census, format } => {
            let mut tables: Vec<Option<QClassTable>> = Vec::new();
            for_each_graph(&input, |g| {
                let n = g.order();
                if tables.len() <= n {
                    tables.resize(n + 1, None);
                }
                if tables[n].is_none() {
                    tables[n] = Some(census_table(n, &census)?);
                }
                let report = verify_q_unique(g, tables[n].as_ref().expect("just built"))?;
                match format {
                    Format::Json => println!("{}", serde_json::to_value(&report).expect("serializable")),
                    Format::Text if report.unique => println!("{}: Q-unique", report.graph6),
                    Format::Text => println!(
                        "{}: not Q-unique, shares Q with {}",
                        report.graph6,
                        report.co_members.join(" ")
                    ),
                }
                Ok(())
            })
        }
    }
}

fn q_config(flags: &QFlags) -> QConfig {
    QConfig {
        method: match flags.method {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Definition => MethodChoice::Definition,
            MethodArg::Recurrence => MethodChoice::Recurrence,
        },
        definition_bound: flags.max_subset_order,
        memo_capacity: flags.memo_capacity.unwrap_or(usize::MAX),
        parallel: flags.workers > 1,
    }
}

fn file_error(path: &Path, e: io::Error) -> Failure {
    Failure {
        code: MALFORMED,
        message: format!("{}: {e}", path.display()),
    }
}

/// Applies `f` to the argument graph, or to every non-blank line of the
/// file or stdin.
fn for_each_graph(input: &GraphInput, mut f: impl FnMut(&Graph) -> Outcome) -> Outcome {
    if let Some(text) = &input.graph {
        return f(&parse_graph(text)?);
    }
    let reader: Box<dyn BufRead> = match &input.file {
        Some(path) => Box::new(io::BufReader::new(File::open(path).map_err(|e| file_error(path, e))?)),
        None => Box::new(io::stdin().lock()),
    };
    let mut seen = false;
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        seen = true;
        f(&parse_graph(&line)?)?;
    }
    if seen {
        Ok(())
    } else {
        Err(Failure {
            code: MALFORMED,
            message: "no graph given".into(),
        })
    }
}

fn compute(g: &Graph, poly: PolyKind, config: &QConfig, workers: usize, format: Format) -> Result<String, Failure> {
    let (text, json_poly, method) = match poly {
        PolyKind::Q => {
            let r = with_workers(workers, || compute_q(g, config))??;
            (r.polynomial.to_string(), r.polynomial.to_json(), Some(r.method))
        }
        PolyKind::Tutte => {
            let t = tutte_of_graph(g);
            (t.to_string(), t.to_json(), None)
        }
        PolyKind::Matching => {
            let m = matching_poly(g);
            (m.to_string(), m.to_json(), None)
        }
        PolyKind::Charpoly => {
            let p = characteristic_poly(g);
            (p.to_string(), p.to_json(), None)
        }
    };
    Ok(match format {
        Format::Text => text,
        Format::Json => {
            let mut v = json!({
                "graph6": to_graph6(g),
                "poly": format!("{poly:?}").to_lowercase(),
                "terms": json_poly,
                "text": text,
            });
            if let Some(m) = method {
                v["method"] = serde_json::to_value(m).expect("serializable");
            }
            v.to_string()
        }
    })
}

fn invariants_text(g: &Graph, r: &scpoly::invariants::InvariantReport) -> String {
    let profile: Vec<String> = r.independent_set_profile.iter().map(u64::to_string).collect();
    let mut s = format!(
        "graph6: {}\norder: {}\nsize: {}\ncomponents: {}\nindependence number: {}\nindependent sets by size: {}\n\
         connectivity: {}\nminimum degree: {}\nregular: {}\nbipartite: {}\n",
        to_graph6(g),
        r.order,
        r.size,
        r.components,
        r.independence_number,
        profile.join(" "),
        r.connectivity,
        r.min_degree,
        r.regular_degree.map_or("no".to_string(), |d| format!("yes, degree {d}")),
        r.bipartite,
    );
    if let Some(c) = &r.four_vertex {
        s += &format!("induced P4: {}\ninduced C4: {}\ninduced claws: {}\n", c.p, c.c4, c.claws);
    }
    s
}

fn census_table(order: usize, flags: &CensusFlags) -> Result<QClassTable, Failure> {
    let mut opts = CensusOptions {
        workers: flags.workers,
        ..CensusOptions::default()
    };
    if flags.allow_order_8 {
        opts = opts.with_order_8();
    }
    let report_progress = order > DEFAULT_CENSUS_ORDER;
    let last = std::sync::atomic::AtomicU64::new(0);
    let progress = |done: u64, total: u64| {
        if !report_progress {
            return;
        }
        let pct = done * 100 / total;
        if pct > last.fetch_max(pct, std::sync::atomic::Ordering::Relaxed) {
            eprintln!("census order {order}: {pct}% of {total} masks");
        }
    };
    Ok(q_classes_with(order, &opts, &progress)?)
}

fn census_summary(table: &QClassTable, format: Format) -> String {
    let s = table.summary();
    match format {
        Format::Json => {
            let classes: Vec<Value> = table
                .non_singleton_classes()
                .map(|(q, keys)| {
                    json!({
                        "q": q.to_json(),
                        "members": keys.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut v = serde_json::to_value(s).expect("serializable");
            v["non_singleton"] = Value::Array(classes);
            format!("{v}\n")
        }
        Format::Text => {
            let mut out = format!(
                "order: {}\ngraphs: {}\nQ-classes: {}\nlargest class: {}\nnon-singleton classes: {} ({} graphs)\n",
                s.order, s.graphs, s.classes, s.largest_class, s.non_singleton_classes, s.graphs_in_non_singleton_classes
            );
            for (q, keys) in table.non_singleton_classes() {
                let members: Vec<String> = keys.iter().map(ToString::to_string).collect();
                out += &format!("  {}: {q}\n", members.join(" "));
            }
            out
        }
    }
}
