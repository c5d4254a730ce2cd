use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncx_core::geometry::{
    check_geom_orientation, cube_triangulation_diameter, cube_triangulation_facets,
};
use ncx_core::tableaux::phi;
use ncx_core::tamari::check_shelling;
use ncx_core::{
    build_complex, build_tamari, ComplexKind, CubeTriangulation, Error, Facet, Method, Mode, Suite,
    Tableau,
};

const GUARD: usize = 16;

#[derive(Parser)]
#[command(
    name = "ncx",
    version,
    about = "Noncrossing and nonnesting complexes on k-subsets of [n]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a tableau into vectors.
    Decompose {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// JSON file holding the rows, or an object with `k`, `n` and `rows`.
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Include the marked positions.
        #[arg(long)]
        marks: bool,
    },
    /// List the facets of a complex.
    Facets {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = KindArg::Nc)]
        complex: KindArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Clique)]
        method: MethodArg,
    },
    /// Build the Grassmann-Tamari digraph, export it and run checks on it.
    Tamari {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum)]
        out: Option<OutArg>,
        #[arg(long, value_enum, value_delimiter = ',')]
        check: Vec<CheckArg>,
    },
    /// Run invariant suites and print a JSON report.
    Verify {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Triangulations of the unit cube.
    Cube {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        triangulation: TriangulationArg,
        /// Print the diameter of the dual graph instead of the facets.
        #[arg(long)]
        diameter: bool,
    },
}

#[derive(clap::Args)]
struct Size {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Skip the k(n-k) <= 16 guard.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Nn,
    Nc,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Nc,
    Nn,
    Sep,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Flip,
    Clique,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Acyclic,
    Shelling,
    Lattice,
    Selfdual,
    GeomOrientation,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Tableaux,
    Complex,
    Tamari,
    Geometry,
    Separation,
}

#[derive(Clone, Copy, ValueEnum)]
enum TriangulationArg {
    Standard,
    Noncrossing,
}

enum Failure {
    Check,
    Usage(String),
    Guard(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Guard(e.to_string()),
            Error::Internal(_) => Failure::Other(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var("NCX_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("NCX_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Decompose {
            k,
            n,
            tableau,
            mode,
            marks,
        } => decompose(k, n, &tableau, mode, marks),
        Command::Facets {
            size,
            complex,
            method,
        } => facets(&size, complex, method),
        Command::Tamari { size, out, check } => tamari(&size, out, &check),
        Command::Verify { size, suite } => verify(&size, suite),
        Command::Cube {
            dim,
            triangulation,
            diameter,
        } => cube(dim, triangulation, diameter),
    }
}

fn guard(size: &Size) -> Outcome {
    let (k, n) = (size.k, size.n);
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters { k, n }.into());
    }
    if !size.force && k * (n - k) > GUARD {
        return Err(Failure::Guard(format!(
            "k(n-k) = {} exceeds {GUARD}; pass --force to run anyway",
            k * (n - k)
        )));
    }
    Ok(())
}

fn print_json(v: &impl serde::Serialize) -> Outcome {
    let s = serde_json::to_string(v).map_err(|e| Failure::Other(e.to_string()))?;
    println!("{s}");
    Ok(())
}

fn read_tableau(k: usize, n: usize, path: &PathBuf) -> std::result::Result<Tableau, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{} is not JSON: {e}", path.display())))?;
    let t = if value.is_array() {
        let rows: Vec<Vec<u64>> = serde_json::from_value(value)
            .map_err(|e| Failure::Usage(format!("tableau rows: {e}")))?;
        Tableau::new(k, n, rows)?
    } else {
        serde_json::from_value::<Tableau>(value).map_err(|e| Failure::Usage(e.to_string()))?
    };
    if (t.k(), t.n()) != (k, n) {
        return Err(Failure::Usage(format!(
            "tableau is for ({},{}), not ({k},{n})",
            t.k(),
            t.n()
        )));
    }
    Ok(t)
}

fn decompose(k: usize, n: usize, path: &PathBuf, mode: ModeArg, marks: bool) -> Outcome {
    let t = read_tableau(k, n, path)?;
    let mode = match mode {
        ModeArg::Nn => Mode::Nn,
        ModeArg::Nc => Mode::Nc,
    };
    let table = phi(&t, mode);
    if marks {
        print_json(&table)
    } else {
        print_json(&json!({ "columns": table.columns() }))
    }
}

fn kind_of(k: KindArg) -> ComplexKind {
    match k {
        KindArg::Nc => ComplexKind::Nc,
        KindArg::Nn => ComplexKind::Nn,
        KindArg::Sep => ComplexKind::Sep,
    }
}

fn facets(size: &Size, complex: KindArg, method: MethodArg) -> Outcome {
    let kind = kind_of(complex);
    let method = match method {
        MethodArg::Flip => Method::Flip,
        MethodArg::Clique => Method::Clique,
    };
    if method == Method::Flip && kind != ComplexKind::Nc {
        return Err(Failure::Usage(format!(
            "flip enumeration is only available for nc, not {kind}"
        )));
    }
    guard(size)?;
    let fs: Vec<Facet> = build_complex(size.k, size.n, kind)?.enumerate_facets(method)?;
    eprintln!("{} facets", fs.len());
    print_json(&fs)
}

fn tamari(size: &Size, out: Option<OutArg>, checks: &[CheckArg]) -> Outcome {
    guard(size)?;
    let d = build_tamari(size.k, size.n)?;
    match out {
        Some(OutArg::Dot) => print!("{}", d.to_dot()),
        Some(OutArg::Json) => print_json(&d.to_json())?,
        None => {}
    }
    let mut all_pass = true;
    let mut seen = Vec::new();
    for &c in checks {
        if seen.contains(&c) {
            continue;
        }
        seen.push(c);
        let (name, pass) = match c {
            CheckArg::Acyclic => ("acyclic", d.check_acyclic()),
            CheckArg::Shelling => {
                let pass = d.topological_order().is_ok_and(|order| {
                    let fs: Vec<Facet> = order.iter().map(|&i| d.nodes()[i].clone()).collect();
                    check_shelling(&fs)
                });
                ("shelling", pass)
            }
            CheckArg::Lattice => ("lattice", d.poset()?.is_lattice()),
            CheckArg::Selfdual => ("selfdual", d.check_selfdual()),
            CheckArg::GeomOrientation => ("geom-orientation", check_geom_orientation(&d).holds()),
        };
        all_pass &= pass;
        let line = format!("{name}: {}", if pass { "PASS" } else { "FAIL" });
        if out.is_some() {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn verify(size: &Size, suite: SuiteArg) -> Outcome {
    guard(size)?;
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Core => vec![Suite::Core],
        SuiteArg::Tableaux => vec![Suite::Tableaux],
        SuiteArg::Complex => vec![Suite::Complex],
        SuiteArg::Tamari => vec![Suite::Tamari],
        SuiteArg::Geometry => vec![Suite::Geometry],
        SuiteArg::Separation => vec![Suite::Separation],
    };
    let report = ncx_core::verify(size.k, size.n, &suites)?;
    for (s, c) in report.failures() {
        eprintln!("FAIL {s}/{}", c.name);
    }
    print_json(&report)?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cube(dim: usize, triangulation: TriangulationArg, diameter: bool) -> Outcome {
    let kind = match triangulation {
        TriangulationArg::Standard => CubeTriangulation::Standard,
        TriangulationArg::Noncrossing => CubeTriangulation::Noncrossing,
    };
    if dim > 6 {
        return Err(Failure::Usage(format!("--dim {dim} exceeds 6")));
    }
    if diameter {
        println!("{}", cube_triangulation_diameter(dim, kind)?);
        return Ok(());
    }
    let vertex = |u: usize| -> String {
        (0..dim)
            .map(|c| if u >> c & 1 == 1 { '1' } else { '0' })
            .collect()
    };
    let fs: Vec<Vec<String>> = cube_triangulation_facets(dim, kind)?
        .into_iter()
        .map(|f| ncx_core::bitset::iter(f).map(vertex).collect())
        .collect();
    print_json(&fs)
}
