mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use curveforge::construct::{build_genus3_20gon, build_xg};
use curveforge::format::{parse_curves, parse_surface, print_curves, print_surface, CurveFile};
use curveforge::report::{emit_report, verify_report};
use curveforge::search::{
    enumerate_simple_curves, extend_to_complete_system, find_dual_arc, search_obstructed_triple,
    SearchBudget,
};
use curveforge::stabilize::stabilize;
use curveforge::systems::{coincidence_test, filling_pair_check, CurveSystem, Verdict};
use curveforge::torus::torus_enumerate_max_systems;
use curveforge::{ChordArc, Error, PolygonComplex};

#[derive(Parser)]
#[command(
    name = "curveforge",
    version,
    about = "Build and certify complete 1-systems of curves on surfaces"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// The (4g+2)-gon with its 2g+1 diagonal curves.
    Xg,
    /// The genus-3 20-gon.
    S20,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Curves,
    Triple,
    Extend,
    Arc,
}

#[derive(Subcommand)]
enum Verb {
    /// Write a built-in surface (and its curves) to PREFIX.srf / PREFIX.crv.
    Build {
        what: Construction,
        #[arg(long, default_value_t = 1)]
        genus: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a curve system and print its report.
    Verify {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        curves: PathBuf,
        /// Fail unless the curves pairwise meet exactly once.
        #[arg(long = "complete-1-system")]
        complete: bool,
        /// Names (or 1-based positions) of three curves to test for the obstruction.
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Surface invariants, homology classes of curves, tree presentations.
    Invariants {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        curves: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        tree: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a filling pair carried by the edges of the surface.
    Filling {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        beta: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounded searches; results are written as a curve file.
    Search {
        kind: SearchKind,
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        curves: Option<PathBuf>,
        #[arg(long = "max-passages", default_value_t = 3)]
        max_passages: usize,
        #[arg(long = "max-nodes", default_value_t = 10_000_000)]
        max_nodes: u64,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Attach handles along dual arcs, writing PREFIX.srf and PREFIX.crv.
    Stabilize {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        curves: PathBuf,
        /// Curve file holding the arc; defaults to the curve file.
        #[arg(long)]
        arc: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest family of torus slopes pairwise meeting once.
    Torus {
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a surface with its curves and arcs.
    Render {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        curves: Option<PathBuf>,
        #[arg(long)]
        arc: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

enum Failure {
    Verification(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFound
            | Error::BudgetExceeded { .. }
            | Error::IterationLimit(_)
            | Error::InfeasibleConstraints
            | Error::Internal(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_surface(path: &Path) -> Result<PolygonComplex, Failure> {
    Ok(parse_surface(&read(path)?)?)
}

fn load_system(surface: &Path, curves: &Path) -> Result<(CurveSystem, CurveFile), Failure> {
    let c = load_surface(surface)?;
    let file = parse_curves(&read(curves)?, &c)?;
    let sys = CurveSystem::new(c, file.curves.clone())?;
    Ok((sys, file))
}

fn load_arc(path: &Path, c: &PolygonComplex) -> Result<ChordArc, Failure> {
    let file = parse_curves(&read(path)?, c)?;
    file.arcs
        .into_iter()
        .next()
        .map(|(_, a)| a)
        .ok_or_else(|| Failure::Input(format!("{}: no arc", path.display())))
}

fn pick_triple(sys: &CurveSystem, wanted: &[String]) -> Result<[usize; 3], Failure> {
    if wanted.len() != 3 {
        return Err(Failure::Input("--triple needs exactly three curves".into()));
    }
    let mut out = [0; 3];
    for (k, s) in wanted.iter().enumerate() {
        out[k] = match sys.names.iter().position(|n| n == s) {
            Some(i) => i,
            None => match s.parse::<usize>() {
                Ok(i) if i >= 1 && i <= sys.len() => i - 1,
                _ => return Err(Failure::Input(format!("no curve `{s}`"))),
            },
        };
    }
    Ok(out)
}

fn report<T: Serialize>(data: &T, out: Option<&Path>) -> Result<(), Failure> {
    let text = emit_report(data);
    print!("{text}");
    if let Some(p) = out {
        write(p, &text)?;
    }
    Ok(())
}

/// Header line recording how an artifact was produced.
fn provenance() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("# generated by: curveforge {}\n", args.join(" "))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

#[derive(Serialize)]
struct BuildReport {
    genus: Option<usize>,
    vertex_count: usize,
    edge_count: usize,
    face_count: usize,
    curves: usize,
}

#[derive(Serialize)]
struct CurveClass {
    name: String,
    crossing_vector: Vec<i64>,
    homology: Vec<i64>,
}

#[derive(Serialize)]
struct InvariantsReport {
    vertex_count: usize,
    edge_count: usize,
    face_count: usize,
    euler: i64,
    orientable: bool,
    genus: Option<usize>,
    h1_rank: Option<usize>,
    presentation: Option<String>,
    curves: Vec<CurveClass>,
}

#[derive(Serialize)]
struct SearchReport {
    kind: &'static str,
    found: bool,
    count: usize,
    null_homologous: usize,
    truncated: bool,
    obstruction: Option<curveforge::systems::Obstruction>,
}

fn run(cli: Cli) -> Outcome {
    match cli.verb {
        Verb::Build { what, genus, out } => {
            let (c, file) = match what {
                Construction::Xg => {
                    let s = build_xg(genus)?;
                    let named = s.named();
                    (
                        s.complex,
                        CurveFile {
                            curves: named,
                            arcs: vec![],
                        },
                    )
                }
                Construction::S20 => (build_genus3_20gon()?, CurveFile::default()),
            };
            let info = c.surface_info();
            let head = provenance();
            match out {
                Some(p) => {
                    write(
                        &with_ext(&p, ".srf"),
                        &format!("{head}{}", print_surface(&c)),
                    )?;
                    if !file.curves.is_empty() {
                        write(
                            &with_ext(&p, ".crv"),
                            &format!("{head}{}", print_curves(&file, &c)),
                        )?;
                    }
                }
                None => print!("{}{}", print_surface(&c), print_curves(&file, &c)),
            }
            eprint!(
                "{}",
                emit_report(&BuildReport {
                    genus: info.genus,
                    vertex_count: info.vertex_count,
                    edge_count: info.edge_count,
                    face_count: info.face_count,
                    curves: file.curves.len(),
                })
            );
            Ok(true)
        }
        Verb::Verify {
            surface,
            curves,
            complete,
            triple,
            out,
            svg,
        } => {
            let (sys, file) = load_system(&surface, &curves)?;
            let t = triple.map(|t| pick_triple(&sys, &t)).transpose()?;
            let r = verify_report(&sys, t)?;
            report(&r, out.as_deref())?;
            if let Some(p) = svg {
                write(&p, &svg::render_svg(&sys.complex, &file.curves, &file.arcs))?;
            }
            let mut ok = !complete || r.complete1;
            if let Some(o) = &r.obstruction {
                ok &= o.verdict == Verdict::Obstructed;
            }
            Ok(ok)
        }
        Verb::Invariants {
            surface,
            curves,
            tree,
            out,
        } => {
            let c = load_surface(&surface)?;
            let info = c.surface_info();
            let h1_rank = c.coboundary_matrix().ok().map(|(_, r)| r);
            let presentation = match tree {
                Some(t) => {
                    let t: Vec<&str> = t
                        .iter()
                        .map(String::as_str)
                        .filter(|s| !s.is_empty())
                        .collect();
                    Some(c.contract_tree_presentation(&t)?.to_string())
                }
                None => None,
            };
            let mut classes = Vec::new();
            if let Some(p) = curves {
                let file = parse_curves(&read(&p)?, &c)?;
                for (name, cv) in file.curves {
                    cv.validate(&c)?;
                    classes.push(CurveClass {
                        name,
                        crossing_vector: cv.crossing_vector(&c),
                        homology: cv.homology_class(&c)?,
                    });
                }
            }
            report(
                &InvariantsReport {
                    vertex_count: info.vertex_count,
                    edge_count: info.edge_count,
                    face_count: info.face_count,
                    euler: info.euler,
                    orientable: info.orientable,
                    genus: info.genus,
                    h1_rank,
                    presentation,
                    curves: classes,
                },
                out.as_deref(),
            )?;
            Ok(true)
        }
        Verb::Filling {
            surface,
            alpha,
            beta,
            out,
        } => {
            let c = load_surface(&surface)?;
            let a: Vec<&str> = alpha.iter().map(String::as_str).collect();
            let b: Vec<&str> = beta.iter().map(String::as_str).collect();
            let f = filling_pair_check(&c, &a, &b)?;
            report(&f, out.as_deref())?;
            Ok(f.identity && f.bound)
        }
        Verb::Search {
            kind,
            surface,
            curves,
            max_passages,
            max_nodes,
            target,
            out,
        } => {
            let budget = SearchBudget::new(max_passages, max_nodes);
            let c = load_surface(&surface)?;
            let seed = || -> Result<CurveSystem, Failure> {
                let p = curves
                    .as_ref()
                    .ok_or_else(|| Failure::Input("this search needs --curves".into()))?;
                Ok(load_system(&surface, p)?.0)
            };
            let mut r = SearchReport {
                kind: "",
                found: false,
                count: 0,
                null_homologous: 0,
                truncated: false,
                obstruction: None,
            };
            let result: Result<CurveFile, Error> = match kind {
                SearchKind::Curves => {
                    r.kind = "curves";
                    let e = enumerate_simple_curves(&c, budget)?;
                    r.count = e.candidates.len();
                    r.null_homologous = e.candidates.iter().filter(|k| k.null_homologous).count();
                    r.truncated = e.truncated;
                    Ok(CurveFile {
                        curves: e
                            .candidates
                            .into_iter()
                            .enumerate()
                            .map(|(i, k)| (format!("c{}", i + 1), k.curve))
                            .collect(),
                        arcs: vec![],
                    })
                }
                SearchKind::Triple => {
                    r.kind = "triple";
                    search_obstructed_triple(&c, budget).and_then(|s| {
                        r.obstruction = Some(coincidence_test(&s)?);
                        Ok(CurveFile {
                            curves: s.named(),
                            arcs: vec![],
                        })
                    })
                }
                SearchKind::Extend => {
                    r.kind = "extend";
                    let s = seed()?;
                    let target = target.unwrap_or(2 * c.genus().unwrap_or(0) + 1);
                    extend_to_complete_system(&s, target, budget).map(|s| CurveFile {
                        curves: s.named(),
                        arcs: vec![],
                    })
                }
                SearchKind::Arc => {
                    r.kind = "arc";
                    let s = seed()?;
                    find_dual_arc(&s, budget).map(|a| CurveFile {
                        curves: vec![],
                        arcs: vec![("gamma".into(), a)],
                    })
                }
            };
            let ok = match result {
                Ok(file) => {
                    r.found = true;
                    if r.count == 0 {
                        r.count = file.curves.len() + file.arcs.len();
                    }
                    let text = format!("{}{}", provenance(), print_curves(&file, &c));
                    match &out {
                        Some(p) => write(p, &text)?,
                        None => print!("{text}"),
                    }
                    true
                }
                Err(e @ (Error::NotFound | Error::BudgetExceeded { .. })) => {
                    r.truncated = matches!(e, Error::BudgetExceeded { .. });
                    eprintln!("{e}");
                    false
                }
                Err(e) => return Err(e.into()),
            };
            if out.is_some() || !r.found {
                report(&r, None)?;
            }
            Ok(ok)
        }
        Verb::Stabilize {
            surface,
            curves,
            arc,
            steps,
            triple,
            out,
        } => {
            let (mut sys, _) = load_system(&surface, &curves)?;
            let mut a = load_arc(arc.as_deref().unwrap_or(&curves), &sys.complex)?;
            for _ in 0..steps {
                (sys, a) = stabilize(&sys, &a)?;
            }
            let t = triple.map(|t| pick_triple(&sys, &t)).transpose()?;
            let r = verify_report(&sys, t)?;
            let file = CurveFile {
                curves: sys.named(),
                arcs: vec![("gamma".into(), a)],
            };
            if let Some(p) = out {
                let head = provenance();
                write(
                    &with_ext(&p, ".srf"),
                    &format!("{head}{}", print_surface(&sys.complex)),
                )?;
                write(
                    &with_ext(&p, ".crv"),
                    &format!("{head}{}", print_curves(&file, &sys.complex)),
                )?;
            }
            report(&r, None)?;
            let mut ok = r.complete1 && r.maximal;
            if let Some(o) = &r.obstruction {
                ok &= o.verdict == Verdict::Obstructed;
            }
            Ok(ok)
        }
        Verb::Torus { bound, out } => {
            if bound < 1 {
                return Err(Failure::Input("--bound must be at least 1".into()));
            }
            report(&torus_enumerate_max_systems(bound), out.as_deref())?;
            Ok(true)
        }
        Verb::Render {
            surface,
            curves,
            arc,
            svg,
        } => {
            let c = load_surface(&surface)?;
            let mut file = match &curves {
                Some(p) => parse_curves(&read(p)?, &c)?,
                None => CurveFile::default(),
            };
            CurveSystem::new(c.clone(), file.curves.clone())?;
            if let Some(p) = arc {
                file.arcs = vec![("gamma".into(), load_arc(&p, &c)?)];
            }
            let doc = svg::render_svg(&c, &file.curves, &file.arcs);
            match svg {
                Some(p) => write(&p, &doc)?,
                None => print!("{doc}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
