//! The `b1` command line: argument parsing and report rendering over
//! `b1_core`. [`run`] never touches stdout so it can be driven from tests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use b1_core::format::{self, StructureFile};
use b1_core::free::{automorphisms, FreeModule};
use b1_core::monogenic::{brute_force_count, enumerate_monogenic_unchecked, formula_count, unmarked_count, MAX_MONOGENIC};
use b1_core::monoid::{adjunction_check, functor_f};
use b1_core::polynomial::{maxspec, sim_i, Battery, Poly, Variables};
use b1_core::{algebra, Error, FinAlgebra, FinModule, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Exit code and report of one invocation. Diagnostics go to `stderr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "b1", version, about = "Finite modules and algebras over the Boolean semifield")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a structure file and report its properties.
    Check { file: PathBuf },
    /// Join-irreducibles of a module and its map into their down-set lattice.
    Birkhoff { file: PathBuf },
    /// Automorphisms of the free module of rank n.
    Gl {
        n: usize,
        /// Also print each automorphism as a map on subsets.
        #[arg(long)]
        maps: bool,
    },
    /// Count monogenic algebras with n elements.
    Monogenic {
        n: usize,
        /// Print a presentation of each algebra.
        #[arg(long)]
        list: bool,
        /// Cross-check against the brute-force count (n <= 4).
        #[arg(long)]
        oracle: bool,
        /// Compare with the closed formula (3n^2 - 13n + 18) / 2.
        #[arg(long)]
        formula: bool,
        /// Raise the size limit.
        #[arg(long, default_value_t = MAX_MONOGENIC)]
        max_n: usize,
    },
    /// The maximal spectrum of the polynomial algebra in n variables.
    Maxspec { n: usize },
    /// Evaluate a polynomial in a finite algebra.
    Eval {
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long)]
        into: PathBuf,
        /// Assignments such as `x=a,y=b`.
        #[arg(long, value_delimiter = ',')]
        map: Vec<String>,
        poly: String,
    },
    /// Decide whether two polynomials agree modulo the congruence of a
    /// zero set.
    #[command(name = "simI")]
    SimI {
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "")]
        zero_set: Vec<String>,
        r: String,
        s: String,
    },
    /// Print the powerset algebra of a monoid as a structure file.
    Functor { file: PathBuf },
    /// Compare algebra morphisms out of F(B) with monoid morphisms into G(E).
    Adjoint { monoid: PathBuf, algebra: PathBuf },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                Outcome::input_error(text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: "))
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let seed = match seed_from_env() {
        Ok(s) => s,
        Err(msg) => return Outcome::input_error(msg),
    };
    let mut out = String::new();
    let result = match cli.command {
        Command::Check { file } => check(&file, &mut out),
        Command::Birkhoff { file } => birkhoff(&file, &mut out),
        Command::Gl { n, maps } => gl(n, maps, &mut out),
        Command::Monogenic {
            n,
            list,
            oracle,
            formula,
            max_n,
        } => monogenic(n, list, oracle, formula, max_n, &mut out),
        Command::Maxspec { n } => spectrum(n, seed, &mut out),
        Command::Eval { vars, into, map, poly } => eval(&vars, &into, &map, &poly, &mut out),
        Command::SimI { vars, zero_set, r, s } => sim(&vars, &zero_set, &r, &s, &mut out),
        Command::Functor { file } => functor(&file, &mut out),
        Command::Adjoint { monoid, algebra } => adjoint(&monoid, &algebra, &mut out),
    };
    match result {
        Ok(holds) => Outcome {
            code: if holds { EXIT_OK } else { EXIT_FALSE },
            stdout: out,
            stderr: String::new(),
        },
        Err(msg) => Outcome::input_error(msg),
    }
}

fn seed_from_env() -> Result<u64, String> {
    match std::env::var("B1_SEED") {
        Err(_) => Ok(DEFAULT_SEED),
        Ok(s) => {
            let s = s.trim();
            let parsed = match s.strip_prefix("0x") {
                Some(hex) => u64::from_str_radix(hex, 16),
                None => s.parse(),
            };
            parsed.map_err(|_| format!("B1_SEED is not an unsigned integer: `{s}`"))
        }
    }
}

/// Success means the reported property holds; `Err` is an input problem.
type Report = Result<bool, String>;

fn load(path: &Path) -> Result<StructureFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_algebra(path: &Path) -> Result<FinAlgebra, String> {
    match load(path)? {
        StructureFile::Algebra(a) => Ok(a),
        other => Err(format!("{}: expected an algebra, found a {}", path.display(), other.kind())),
    }
}

fn load_module(path: &Path) -> Result<FinModule, String> {
    match load(path)? {
        StructureFile::Module(m) => Ok(m),
        StructureFile::Algebra(a) => Ok(a.module().clone()),
        StructureFile::Poset(p) => p.module_of_order().map_err(|e| format!("{}: {e}", path.display())),
        other => Err(format!("{}: expected a module, found a {}", path.display(), other.kind())),
    }
}

fn names_of(m: &FinModule, xs: &[usize]) -> String {
    let v: Vec<&str> = xs.iter().map(|&x| m.name(x)).collect();
    format!("{{{}}}", v.join(","))
}

fn module_report(m: &FinModule, out: &mut String) {
    let _ = writeln!(out, "size={}", m.size());
    let _ = writeln!(out, "top={}", m.name(m.top()));
    match m.distributivity_violation() {
        None => {
            let _ = writeln!(out, "distributive=true");
        }
        Some((a, b, c)) => {
            let _ = writeln!(out, "distributive=false witness=({},{},{})", m.name(a), m.name(b), m.name(c));
        }
    }
    match m.modularity_violation() {
        None => {
            let _ = writeln!(out, "modular=true");
        }
        Some((a, b, c)) => {
            let _ = writeln!(out, "modular=false witness=({},{},{})", m.name(a), m.name(b), m.name(c));
        }
    }
    let _ = writeln!(out, "join_irreducibles={}", names_of(m, &m.join_irreducibles().elements));
}

fn check(path: &Path, out: &mut String) -> Report {
    let s = load(path)?;
    let _ = writeln!(out, "kind={}", s.kind());
    let _ = writeln!(out, "valid=true");
    match &s {
        StructureFile::Module(m) => module_report(m, out),
        StructureFile::Poset(p) => {
            let _ = writeln!(out, "size={}", p.size());
            match p.module_of_order() {
                Ok(m) => {
                    let _ = writeln!(out, "decent=true");
                    module_report(&m, out);
                }
                Err(e) => {
                    let _ = writeln!(out, "decent=false ({e})");
                }
            }
            let _ = writeln!(out, "downsets={}", p.downsets().len());
        }
        StructureFile::Algebra(a) => {
            module_report(a.module(), out);
            let gens: Vec<usize> = (0..a.size()).filter(|&x| a.is_generated_by(x)).collect();
            let _ = writeln!(out, "monogenic_generators={}", names_of(a.module(), &gens));
            if a.size() <= algebra::MAX_CONGRUENCE_SEARCH {
                let congs = algebra::all_congruences(a).map_err(|e| e.to_string())?;
                let maximal = congs.iter().filter(|c| algebra::is_maximal(a, c)).count();
                let _ = writeln!(out, "congruences={} maximal={maximal}", congs.len());
            }
        }
        StructureFile::Monoid(m) => {
            let _ = writeln!(out, "size={}", m.size());
            let _ = writeln!(out, "unit={}", m.name(m.unit()));
            let units: Vec<&str> = m.units().iter().map(|&u| m.name(u)).collect();
            let _ = writeln!(out, "units={{{}}}", units.join(","));
            let _ = writeln!(out, "group={}", m.is_group());
        }
    }
    Ok(true)
}

fn birkhoff(path: &Path, out: &mut String) -> Report {
    let m = load_module(path)?;
    let b = m.birkhoff();
    let ji = &b.irreducibles.elements;
    let _ = writeln!(out, "join_irreducibles={}", names_of(&m, ji));
    let _ = writeln!(out, "downsets={}", b.downsets.module.size());
    for x in 0..m.size() {
        let set = b.downsets.sets[b.morphism.apply(x)];
        let members: Vec<usize> = ji.iter().enumerate().filter(|(i, _)| set >> i & 1 == 1).map(|(_, &e)| e).collect();
        let _ = writeln!(out, "{} -> {}", m.name(x), names_of(&m, &members));
    }
    let iso = b.is_isomorphism();
    let _ = writeln!(out, "morphism={}", b.morphism.is_morphism());
    let _ = writeln!(out, "bijective={iso}");
    let _ = writeln!(out, "distributive={}", m.is_distributive());
    Ok(iso)
}

fn gl(n: usize, maps: bool, out: &mut String) -> Report {
    let auts = automorphisms(n).map_err(|e| e.to_string())?;
    let expected: usize = (1..=n).product();
    let _ = writeln!(out, "automorphisms={} expected={expected}", auts.len());
    let mut induced = true;
    for a in &auts {
        let cycles: Vec<String> = a
            .permutation
            .cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        let _ = writeln!(out, "{}", if cycles.is_empty() { "id".to_string() } else { cycles.join("") });
        induced &= (0..1usize << n).all(|s| a.morphism.apply(s) == a.permutation.apply_set(s));
        if maps {
            for s in 0..1usize << n {
                let _ = writeln!(
                    out,
                    "  {} -> {}",
                    FreeModule::subset_name(s),
                    FreeModule::subset_name(a.morphism.apply(s))
                );
            }
        }
    }
    Ok(induced && auts.len() == expected)
}

fn monogenic(n: usize, list: bool, oracle: bool, formula: bool, max_n: usize, out: &mut String) -> Report {
    if n < 2 {
        return Err(format!("n must be at least 2, got {n}"));
    }
    if n > max_n {
        return Err(Error::SizeTooLarge { size: n, max: max_n }.to_string());
    }
    let all = enumerate_monogenic_unchecked(n);
    let mut holds = true;
    if formula {
        let expected = formula_count(n as u64);
        let _ = writeln!(out, "enumerated={} formula={expected}", all.len());
        holds &= all.len() as u64 == expected;
    } else {
        let _ = writeln!(out, "enumerated={}", all.len());
    }
    let _ = writeln!(out, "unmarked={}", unmarked_count(&all));
    if oracle {
        let count = brute_force_count(n).map_err(|e| e.to_string())?;
        let _ = writeln!(out, "oracle={count}");
        holds &= count == all.len();
    }
    if list {
        for m in &all {
            let _ = writeln!(out, "{}", m.presentation);
        }
    }
    Ok(holds)
}

fn spectrum(n: usize, seed: u64, out: &mut String) -> Report {
    let vars = Variables::numbered(n);
    let battery = Battery::standard(&vars, seed);
    let spec = maxspec(&vars, &battery).map_err(|e| e.to_string())?;
    let kind = if spec.battery_exhaustive { "exhaustive" } else { "sampled" };
    let _ = writeln!(out, "points={} expected={}", spec.points.len(), 1u64 << n);
    let _ = writeln!(out, "battery={} polynomials={}", kind, battery.polys.len());
    for p in &spec.points {
        let zeros: Vec<&str> = (0..n).filter(|&i| p.zero_set >> i & 1 == 1).map(|i| vars.names()[i].as_str()).collect();
        let values: Vec<String> = vars.names().iter().zip(&p.assignment).map(|(v, b)| format!("{v}={b}")).collect();
        let status = match &p.mismatch {
            None => "verified".to_string(),
            Some(f) => format!("mismatch on {f}"),
        };
        let _ = writeln!(out, "I={{{}}} {} {status}", zeros.join(","), values.join(" "));
    }
    let _ = writeln!(out, "distinct={}", spec.pairwise_distinct());
    Ok(spec.all_verified() && spec.pairwise_distinct() && spec.points.len() == 1 << n)
}

fn variables(names: &[String]) -> Result<Variables, String> {
    let names: Vec<&str> = names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
    Variables::new(names).map_err(|e| e.to_string())
}

fn eval(vars: &[String], into: &Path, map: &[String], text: &str, out: &mut String) -> Report {
    let vars = variables(vars)?;
    let alg = load_algebra(into)?;
    let mut phi = vec![None; vars.len()];
    for item in map.iter().filter(|s| !s.trim().is_empty()) {
        let (v, e) = item.split_once('=').ok_or_else(|| format!("assignment `{item}` is not of the form var=element"))?;
        let i = vars.index_of(v.trim()).ok_or_else(|| format!("unknown variable `{}` in --map", v.trim()))?;
        let x = alg.index_of(e.trim()).ok_or_else(|| format!("unknown element `{}` in --map", e.trim()))?;
        phi[i] = Some(x);
    }
    let phi: Vec<usize> = phi
        .iter()
        .zip(vars.names())
        .map(|(x, v)| x.ok_or_else(|| format!("variable `{v}` has no value in --map")))
        .collect::<Result<_, _>>()?;
    let poly = Poly::parse(text, &vars).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "{}", alg.name(poly.evaluate(&alg, &phi)));
    Ok(true)
}

fn sim(vars: &[String], zero_set: &[String], r: &str, s: &str, out: &mut String) -> Report {
    let vars = variables(vars)?;
    let zeros: Vec<&str> = zero_set.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
    let mask = vars.mask(&zeros).map_err(|e| e.to_string())?;
    let r = Poly::parse(r, &vars).map_err(|e| e.to_string())?;
    let s = Poly::parse(s, &vars).map_err(|e| e.to_string())?;
    let same = sim_i(&r, &s, mask).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "{same}");
    Ok(same)
}

fn functor(path: &Path, out: &mut String) -> Report {
    let StructureFile::Monoid(m) = load(path)? else {
        return Err(format!("{}: expected a monoid", path.display()));
    };
    let f = functor_f(&m).map_err(|e| e.to_string())?;
    out.push_str(&format::write_algebra(&f.algebra));
    Ok(true)
}

fn adjoint(monoid: &Path, alg: &Path, out: &mut String) -> Report {
    let StructureFile::Monoid(b) = load(monoid)? else {
        return Err(format!("{}: expected a monoid", monoid.display()));
    };
    let e = load_algebra(alg)?;
    let r = adjunction_check(&b, &e).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "algebra_homs={} monoid_homs={}", r.algebra_homs, r.monoid_homs);
    let _ = writeln!(out, "mutually_inverse={}", r.mutually_inverse);
    Ok(r.holds())
}
