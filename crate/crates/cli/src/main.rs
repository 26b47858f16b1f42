//! `csemigroup`: command-line access to the library over JSON inputs.
//!
//! Outputs are compact JSON with sorted keys (DOT for `tree --dot`), so
//! identical inputs give byte-identical output. Errors go to stderr as
//! `{"error": kind, "message": text}` with the exit codes of
//! [`input::CliError::exit_code`].

mod input;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use csemigroup::covers::{build_tree, enumerate_dd, export_graph, GraphFormat};
use csemigroup::irreducible::{
    classify, fourth_pseudo_symmetric, irreducible_iff_half_witness, pseudo_symmetric_cover, symmetric_double,
};
use csemigroup::oracle::{brute_dd, brute_hilbert_auto, brute_member};
use csemigroup::quotient::quotient_gaps;
use csemigroup::quotient::quotient_generated;
use csemigroup::semigroup::DEFAULT_DEGREE_CEILING;
use csemigroup::varieties::{
    arf_check, cm_check, convex_member, convex_quotient_equal, default_ray_elements, saturated_check, ModularSystem,
    RationalPolytope,
};
use csemigroup::{
    gaps_from_generators, hilbert_basis, CSemigroup, Cone, DiophantineSystem, GeneratedSemigroup, LatticePoint,
    Membership, OrderKind, TotalOrder,
};
use serde_json::{json, Value};

use input::*;

#[derive(Parser)]
#[command(name = "csemigroup", version, about = "Quotients, covers and irreducibility of C-semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Semigroup JSON file (gaps or generators form), `-` for stdin.
    #[arg(long)]
    semigroup: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    /// Projected Hilbert basis of the generators' system.
    Algorithm1,
    /// Division of the gap set.
    Gaps,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variety {
    /// All 𝒞-semigroups over the cone.
    All,
    /// Semigroups without an Arf violation in `--window`.
    Arf,
}

#[derive(Subcommand)]
enum Command {
    /// Check a semigroup and report its genus.
    Validate(Input),
    /// Membership of a point.
    Member {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: String,
        #[arg(long)]
        verify: bool,
    },
    /// The gap set.
    Gaps(Input),
    /// The minimal generating set.
    Generators(Input),
    /// The Frobenius element, `null` for the full cone.
    Frobenius(Input),
    /// The pseudo-Frobenius elements.
    Pf(Input),
    /// The Apéry set `{x ∈ S : x − m gap}`, or the classical one in a box.
    Apery {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: String,
        /// Corner of the box for the classical `{x ∈ S : x − m ∉ S}`.
        #[arg(long)]
        classical_window: Option<String>,
    },
    /// The fundamental gaps.
    Fg(Input),
    /// The number of gaps.
    Genus(Input),
    /// `S/d`.
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value = "gaps")]
        via: Via,
        #[arg(long)]
        verify: bool,
    },
    /// The covers `T` with `T/d = S` and `Fb(T) ⪯ f`.
    Ddset {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        f: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        verify: bool,
    },
    /// The cover tree rooted at the full cone.
    Tree {
        /// Cone rays, e.g. `"4,1;9,5"`.
        #[arg(long)]
        rays: String,
        #[arg(long, default_value = "graded-then-revcoordlex")]
        order: String,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value = "all")]
        variety: Variety,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Symmetric, pseudo-symmetric or not irreducible.
    Classify(Input),
    /// The symmetric `T` with `Fb(T) = f` and `T/2 = S`.
    Double {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        f: String,
    },
    /// The pseudo-symmetric `T` with `Fb(T) = 2Fb(S)` and `T/2 = S`.
    Cover(Input),
    /// A pseudo-symmetric `T′` with `T′/4 = S`.
    Fourth {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        f: String,
    },
    /// A pseudo-symmetric `T` with `T/2 = S`, `null` when `S` is reducible.
    Witness(Input),
    /// Proportionally modular systems `A x mod b ≤ G x`.
    Pm {
        /// System JSON `{"A": …, "G": …, "b": …}`.
        #[arg(long)]
        system: String,
        /// Intersect with this system first.
        #[arg(long)]
        with: Option<String>,
        /// Then take the quotient by `d`.
        #[arg(long)]
        d: Option<i64>,
        /// Report membership of this point instead of the system.
        #[arg(long)]
        x: Option<String>,
    },
    /// Search a window for an Arf violation.
    Arf {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        window: String,
    },
    /// Search a window for a saturation violation.
    Saturated {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        window: String,
        #[arg(long, default_value_t = 2)]
        coeffs: i64,
    },
    /// Search a window for a Cohen–Macaulay violation (simplicial cones).
    Cm {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        window: String,
        /// One element per extremal ray, e.g. `"4,0;0,4"`; defaults to the
        /// least multiples in `S`.
        #[arg(long)]
        ray_elements: Option<String>,
    },
    /// Convex body semigroups of rational polytopes.
    Convex {
        /// Polytope JSON `{"vertices": …}`; coordinates are integers or `"p/q"`.
        #[arg(long)]
        polytope: String,
        #[arg(long)]
        x: Option<String>,
        /// Compare `B(F)/d` with `B(F/d)` on `--window`.
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        window: Option<String>,
    },
    /// Hilbert basis of `A x = 0`, `x ≥ 0`.
    Hilbert {
        /// System JSON `{"rows": …}`.
        #[arg(long)]
        system: String,
        #[arg(long)]
        verify: bool,
    },
}

fn points(v: &[LatticePoint]) -> Value {
    json!(v)
}

fn semigroup_value(s: &CSemigroup) -> Value {
    serde_json::from_str(&s.canonical_json()).expect("canonical JSON parses")
}

fn canonical_set(v: &[CSemigroup]) -> BTreeSet<String> {
    v.iter().map(CSemigroup::canonical_json).collect()
}

fn verify(ok: bool, what: &str) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Verify(format!("oracle disagrees on {what}")))
    }
}

fn window_point(text: &Option<String>, what: &str) -> CliResult<LatticePoint> {
    match text {
        Some(w) => parse_point(w),
        None => Err(CliError::Schema(format!("{what} requires --window"))),
    }
}

fn run(command: Command) -> CliResult<String> {
    let value = match command {
        Command::Validate(i) => {
            let s = read_semigroup(&i.semigroup)?;
            json!({"valid": true, "genus": s.genus()})
        }
        Command::Member { input, x, verify: check } => {
            let s = read_semigroup(&input.semigroup)?;
            let x = parse_point(&x)?;
            check_dim(s.dim(), &x)?;
            let member = s.contains(&x);
            if check {
                verify(brute_member(s.minimal_generators(), &x) == member, "membership")?;
            }
            json!({"member": member})
        }
        Command::Gaps(i) => json!({"gaps": points(read_semigroup(&i.semigroup)?.gaps())}),
        Command::Generators(i) => json!({"generators": points(read_semigroup(&i.semigroup)?.minimal_generators())}),
        Command::Frobenius(i) => json!({"frobenius": read_semigroup(&i.semigroup)?.frobenius()}),
        Command::Pf(i) => json!({"pseudo_frobenius": points(&read_semigroup(&i.semigroup)?.pseudo_frobenius())}),
        Command::Apery { input, m, classical_window } => {
            let s = read_semigroup(&input.semigroup)?;
            let m = parse_point(&m)?;
            check_dim(s.dim(), &m)?;
            match classical_window {
                Some(w) => json!({"apery_classical": points(&s.apery_classical(&m, &parse_point(&w)?)?)}),
                None => json!({"apery": points(&s.apery(&m)?)}),
            }
        }
        Command::Fg(i) => json!({"fundamental_gaps": points(&read_semigroup(&i.semigroup)?.fundamental_gaps())}),
        Command::Genus(i) => json!({"genus": read_semigroup(&i.semigroup)?.genus()}),
        Command::Quotient { input, d, via, verify: check } => {
            let s = read_semigroup(&input.semigroup)?;
            let by_generators = || -> CliResult<CSemigroup> {
                let g = GeneratedSemigroup::from(&s);
                let gens = GeneratedSemigroup::new(quotient_generated(&g, d)?, s.order().clone())?;
                Ok(gaps_from_generators(&gens, DEFAULT_DEGREE_CEILING)?)
            };
            let q = match via {
                Via::Gaps => quotient_gaps(&s, d)?,
                Via::Algorithm1 => by_generators()?,
            };
            if check {
                let other = match via {
                    Via::Gaps => by_generators()?,
                    Via::Algorithm1 => quotient_gaps(&s, d)?,
                };
                verify(other == q, "the quotient")?;
            }
            semigroup_value(&q)
        }
        Command::Ddset { input, d, f, count_only, verify: check } => {
            let s = read_semigroup(&input.semigroup)?;
            let f = parse_point(&f)?;
            check_dim(s.dim(), &f)?;
            // the oracle runs first so its window guard trips before the exponential search
            let oracle = if check { Some(brute_dd(&s, d, &f)?) } else { None };
            let covers = enumerate_dd(&s, d, &f)?;
            if let Some(oracle) = oracle {
                verify(canonical_set(&oracle) == canonical_set(&covers), "the cover set")?;
            }
            if count_only {
                json!(covers.len())
            } else {
                Value::Array(covers.iter().map(semigroup_value).collect())
            }
        }
        Command::Tree { rays, order, d, f, variety, window, dot } => {
            let cone = Cone::new(parse_points(&rays)?)?;
            let order = TotalOrder::of_kind(order.parse::<OrderKind>()?);
            let f = parse_point(&f)?;
            check_dim(cone.dim(), &f)?;
            let tree = match variety {
                Variety::All => build_tree(&cone, &order, d, &f, |_| true)?,
                Variety::Arf => {
                    let w = window_point(&window, "the arf variety")?;
                    build_tree(&cone, &order, d, &f, |s: &CSemigroup| arf_check(s, &w).is_ok_and(|v| v.is_none()))?
                }
            };
            return Ok(export_graph(&tree, if dot { GraphFormat::Dot } else { GraphFormat::Json })
                .trim_end()
                .to_string());
        }
        Command::Classify(i) => json!({"classification": classify(&read_semigroup(&i.semigroup)?)?}),
        Command::Double { input, f } => {
            let s = read_semigroup(&input.semigroup)?;
            semigroup_value(&symmetric_double(&s, &parse_point(&f)?)?)
        }
        Command::Cover(i) => semigroup_value(&pseudo_symmetric_cover(&read_semigroup(&i.semigroup)?)?),
        Command::Fourth { input, f } => {
            let s = read_semigroup(&input.semigroup)?;
            semigroup_value(&fourth_pseudo_symmetric(&s, &parse_point(&f)?)?)
        }
        Command::Witness(i) => match irreducible_iff_half_witness(&read_semigroup(&i.semigroup)?)? {
            Some(t) => semigroup_value(&t),
            None => Value::Null,
        },
        Command::Pm { system, with, d, x } => {
            let mut sys: ModularSystem = read_json(&system)?;
            if let Some(other) = with {
                sys = sys.intersect(&read_json(&other)?)?;
            }
            if let Some(d) = d {
                sys = sys.quotient(d)?;
            }
            match x {
                Some(x) => {
                    let x = parse_point(&x)?;
                    check_dim(sys.dim(), &x)?;
                    json!({"member": sys.contains(&x)})
                }
                None => json!(sys),
            }
        }
        Command::Arf { input, window } => {
            let s = AnySemigroup::read(&input.semigroup)?;
            json!({"violation": arf_check(&s, &parse_point(&window)?)?})
        }
        Command::Saturated { input, window, coeffs } => {
            let s = AnySemigroup::read(&input.semigroup)?;
            json!({"violation": saturated_check(&s, &parse_point(&window)?, coeffs)?})
        }
        Command::Cm { input, window, ray_elements } => {
            let s = AnySemigroup::read(&input.semigroup)?;
            let cone = s.cone()?;
            let window = parse_point(&window)?;
            let elements = match ray_elements {
                Some(text) => parse_points(&text)?,
                None => default_ray_elements(&s, &cone, DEFAULT_DEGREE_CEILING)?,
            };
            json!({"violation": cm_check(&s, &cone, &elements, &window)?})
        }
        Command::Convex { polytope, x, d, window } => {
            let poly: RationalPolytope = read_json(&polytope)?;
            match (x, d) {
                (Some(x), _) => {
                    let x = parse_point(&x)?;
                    check_dim(poly.dim(), &x)?;
                    json!({"member": convex_member(&poly, &x)})
                }
                (None, Some(d)) => {
                    let w = window_point(&window, "convex --d")?;
                    json!({"counterexample": convex_quotient_equal(&poly, d, &w)?})
                }
                (None, None) => return Err(CliError::Schema("convex needs --x or --d".into())),
            }
        }
        Command::Hilbert { system, verify: check } => {
            let sys: DiophantineSystem = read_json(&system)?;
            let basis = hilbert_basis(&sys)?.into_solutions();
            if check {
                let fast: BTreeSet<_> = basis.iter().cloned().collect();
                verify(brute_hilbert_auto(&sys)?.into_iter().collect::<BTreeSet<_>>() == fast, "the Hilbert basis")?;
            }
            json!({"basis": points(&basis)})
        }
    };
    Ok(serde_json::to_string(&value).expect("JSON values serialize"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.kind(), "message": e.message()}));
            ExitCode::from(e.exit_code())
        }
    }
}
