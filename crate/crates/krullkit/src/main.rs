//! `krullkit`: decide lattice orderings, compute Krull dimensions, and emit
//! verified algebraic certificates.
//!
//! Exit codes: 0 = decided true / certificate produced, 1 = decided false,
//! 2 = bounded-unknown (search exhausted), 3 = any error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use krullkit::formats::{
    self, certificate_to_json, chain_to_json, form1_to_data, form3_to_data, CommandOutput,
    LoadedLattice,
};
use krullkit_core::field::{PrimeField, Rationals};
use krullkit_core::groebner::GroebnerLimits;
use krullkit_core::krull::{
    kr_entails, kr_entails_heyting, lattice_dim_leq, lattice_dimension, dim_witness_for,
    KrQuery, SearchLimits,
};
use krullkit_core::ring::{
    algebraic_dependence, certificate_from_dependence, collapse_1_to_3, collapse_3_to_1,
    search_certificate, verify_form1, verify_form3, zar_implies_elem, zar_join, zar_leq,
    zar_meet, CertSearchBounds, Integers, Modular, PolyRing, Ring, SearchOutcome,
    ZarElem,
};

#[derive(Parser)]
#[command(
    name = "krullkit",
    about = "Krull dimension certificates for finite lattices and commutative rings",
    version
)]
struct Cli {
    /// Emit a machine-readable JSON result on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Krull dimension of a finite distributive lattice, or
    /// check a bound.
    DimLattice {
        /// Lattice JSON file (poset covers or raw meet/join tables).
        #[arg(long)]
        lattice: PathBuf,
        /// Check dimension <= this bound instead of computing it.
        #[arg(long)]
        leq: Option<i64>,
        /// Print the per-sequence witness table.
        #[arg(long)]
        verbose: bool,
    },
    /// Decide an inequality in the Krull lattice Kr_l(L).
    KrEntails {
        #[arg(long)]
        lattice: PathBuf,
        /// Query JSON: {"levels": l, "U": [[..]], "J": [[..]]}.
        #[arg(long)]
        query: PathBuf,
        /// Decision procedure: witness, heyting, or both.
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Produce a verified singularity certificate for a sequence, or
    /// report bounded-unknown.
    RingSingular {
        /// Ring: zz | zmod:<n> | poly:<field>:<nvars>, field in {q, zp:<p>}.
        #[arg(long)]
        ring: String,
        /// Comma-separated ring elements, e.g. "x1, x1^2".
        #[arg(long)]
        seq: String,
        /// Search bounds: max_exponent,coef_degree,coefficients,candidates.
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Convert collapse data between the nested identity (form 1) and the
    /// triangular membership system (form 3).
    RingCollapse {
        #[arg(long)]
        ring: String,
        /// Chain JSON file with embedded form-1 or form-3 data.
        #[arg(long)]
        chain: PathBuf,
        /// Target form: 1 or 3.
        #[arg(long)]
        to: u8,
    },
    /// Operations in the Zariski lattice of a ring.
    Zar {
        #[arg(long)]
        ring: String,
        /// leq | join | meet | implies.
        #[arg(long)]
        op: String,
        /// Generators of the left radical (comma separated).
        #[arg(long)]
        lhs: String,
        /// Generators of the right radical.
        #[arg(long)]
        rhs: String,
    },
}

#[derive(Debug, Clone, Copy)]
enum RingSpec {
    Integers,
    Modular(u64),
    PolyRationals(usize),
    PolyPrime(u64, usize),
}

impl RingSpec {
    fn parse(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["zz"] => Ok(RingSpec::Integers),
            ["zmod", n] => n
                .parse()
                .map(RingSpec::Modular)
                .map_err(|_| format!("bad modulus in {s:?}")),
            ["poly", "q", nv] => nv
                .parse()
                .map(RingSpec::PolyRationals)
                .map_err(|_| format!("bad variable count in {s:?}")),
            ["poly", "zp", p, nv] => {
                let p = p.parse().map_err(|_| format!("bad prime in {s:?}"))?;
                let nv = nv.parse().map_err(|_| format!("bad variable count in {s:?}"))?;
                Ok(RingSpec::PolyPrime(p, nv))
            }
            ["poly", field, nv] if field.starts_with("zp") => {
                let p = field[2..].parse().map_err(|_| format!("bad prime in {s:?}"))?;
                let nv = nv.parse().map_err(|_| format!("bad variable count in {s:?}"))?;
                Ok(RingSpec::PolyPrime(p, nv))
            }
            _ => Err(format!("unknown ring flag {s:?} (zz | zmod:<n> | poly:<field>:<nvars>)")),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(output) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&output).expect("serializable"));
            } else {
                println!("{}", output.summary);
            }
            ExitCode::from(output.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn search_limits() -> SearchLimits {
    match std::env::var("KRULLKIT_MAX_SEARCH").ok().and_then(|v| v.parse().ok()) {
        Some(max_states) => SearchLimits { max_states },
        None => SearchLimits::default(),
    }
}

fn cert_bounds(flag: &Option<String>) -> Result<CertSearchBounds, String> {
    let mut bounds = CertSearchBounds::default();
    if let Some(max) = std::env::var("KRULLKIT_MAX_SEARCH")
        .ok()
        .and_then(|v| v.parse().ok())
    {
        bounds.max_candidates = max;
    }
    if let Some(spec) = flag {
        let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(format!(
                "--bounds wants max_exponent,coef_degree,coefficients,candidates, got {spec:?}"
            ));
        }
        bounds.max_exponent = parts[0].parse().map_err(|_| "bad max_exponent".to_string())?;
        bounds.max_coef_degree = parts[1].parse().map_err(|_| "bad coef_degree".to_string())?;
        bounds.max_coefficients = parts[2].parse().map_err(|_| "bad coefficients".to_string())?;
        bounds.max_candidates = parts[3].parse().map_err(|_| "bad candidates".to_string())?;
    }
    Ok(bounds)
}

fn run(cli: &Cli) -> Result<CommandOutput, String> {
    match &cli.command {
        Command::DimLattice { lattice, leq, verbose } => {
            let loaded = formats::parse_lattice(&read(lattice)?).map_err(|e| e.to_string())?;
            dim_lattice(&loaded, *leq, *verbose)
        }
        Command::KrEntails { lattice, query, method } => {
            let loaded = formats::parse_lattice(&read(lattice)?).map_err(|e| e.to_string())?;
            let q = formats::parse_query(&read(query)?, &loaded).map_err(|e| e.to_string())?;
            kr_command(&loaded, &q, method)
        }
        Command::RingSingular { ring, seq, bounds } => {
            let bounds = cert_bounds(bounds)?;
            match RingSpec::parse(ring)? {
                RingSpec::Integers => singular_search(&Integers, seq, &bounds),
                RingSpec::Modular(n) => {
                    let r = Modular::new(n).map_err(|e| e.to_string())?;
                    singular_search(&r, seq, &bounds)
                }
                RingSpec::PolyRationals(nv) => {
                    let r = PolyRing::new(Rationals, nv, GroebnerLimits::default());
                    singular_poly(&r, seq, &bounds)
                }
                RingSpec::PolyPrime(p, nv) => {
                    let f = PrimeField::new(p).map_err(|e| e.to_string())?;
                    let r = PolyRing::new(f, nv, GroebnerLimits::default());
                    singular_poly(&r, seq, &bounds)
                }
            }
        }
        Command::RingCollapse { ring, chain, to } => {
            let json = read(chain)?;
            match RingSpec::parse(ring)? {
                RingSpec::Integers => collapse_cmd(&Integers, &json, *to),
                RingSpec::Modular(n) => {
                    let r = Modular::new(n).map_err(|e| e.to_string())?;
                    collapse_cmd(&r, &json, *to)
                }
                RingSpec::PolyRationals(nv) => {
                    let r = PolyRing::new(Rationals, nv, GroebnerLimits::default());
                    collapse_cmd(&r, &json, *to)
                }
                RingSpec::PolyPrime(p, nv) => {
                    let f = PrimeField::new(p).map_err(|e| e.to_string())?;
                    let r = PolyRing::new(f, nv, GroebnerLimits::default());
                    collapse_cmd(&r, &json, *to)
                }
            }
        }
        Command::Zar { ring, op, lhs, rhs } => match RingSpec::parse(ring)? {
            RingSpec::Integers => zar_cmd(&Integers, op, lhs, rhs),
            RingSpec::Modular(n) => {
                let r = Modular::new(n).map_err(|e| e.to_string())?;
                zar_cmd(&r, op, lhs, rhs)
            }
            RingSpec::PolyRationals(nv) => {
                let r = PolyRing::new(Rationals, nv, GroebnerLimits::default());
                zar_cmd(&r, op, lhs, rhs)
            }
            RingSpec::PolyPrime(p, nv) => {
                let f = PrimeField::new(p).map_err(|e| e.to_string())?;
                let r = PolyRing::new(f, nv, GroebnerLimits::default());
                zar_cmd(&r, op, lhs, rhs)
            }
        },
    }
}

fn dim_lattice(
    loaded: &LoadedLattice,
    leq: Option<i64>,
    verbose: bool,
) -> Result<CommandOutput, String> {
    let l = &loaded.lattice;
    let limits = search_limits();
    match leq {
        Some(d) => {
            let check = lattice_dim_leq(l, d, &limits).map_err(|e| e.to_string())?;
            let mut out = if check.holds {
                CommandOutput::new("holds", format!("dimension <= {d} holds"))
            } else {
                let ce = check
                    .counterexample
                    .as_ref()
                    .map(|xs| {
                        xs.iter().map(|&e| loaded.name_of(e)).collect::<Vec<_>>().join(", ")
                    })
                    .unwrap_or_default();
                CommandOutput::new(
                    "fails",
                    format!("dimension <= {d} fails (no witnesses for [{ce}])"),
                )
            };
            out.dimension = Some(d);
            if verbose && check.holds && d >= 0 {
                print_witness_table(loaded, d);
            }
            Ok(out)
        }
        None => {
            let d = lattice_dimension(l, &limits).map_err(|e| e.to_string())?;
            if verbose && d >= 0 {
                print_witness_table(loaded, d);
            }
            let mut out = CommandOutput::new("holds", format!("dimension = {d}"));
            out.dimension = Some(d);
            Ok(out)
        }
    }
}

/// Witness table over join-irreducible sequences at bound `d`.
fn print_witness_table(loaded: &LoadedLattice, d: i64) {
    let l = &loaded.lattice;
    let gens = l.join_irreducibles();
    let len = (d + 1) as usize;
    let mut idx = vec![0usize; len];
    if gens.is_empty() {
        return;
    }
    loop {
        let xs: Vec<usize> = idx.iter().map(|&i| gens[i]).collect();
        let names = |v: &[usize]| {
            v.iter().map(|&e| loaded.name_of(e)).collect::<Vec<_>>().join(", ")
        };
        match dim_witness_for(l, &xs) {
            Some(a) => eprintln!("  [{}] -> [{}]", names(&xs), names(&a)),
            None => eprintln!("  [{}] -> no witness", names(&xs)),
        }
        let mut pos = 0;
        loop {
            if pos == len {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < gens.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn kr_command(loaded: &LoadedLattice, q: &KrQuery, method: &str) -> Result<CommandOutput, String> {
    let l = &loaded.lattice;
    let limits = search_limits();
    let (holds, witness) = match method {
        "witness" => {
            let w = kr_entails(l, q, &limits).map_err(|e| e.to_string())?;
            (w.is_some(), w)
        }
        "heyting" => (kr_entails_heyting(l, q).map_err(|e| e.to_string())?, None),
        "both" => {
            let w = kr_entails(l, q, &limits).map_err(|e| e.to_string())?;
            let h = kr_entails_heyting(l, q).map_err(|e| e.to_string())?;
            if w.is_some() != h {
                return Err("witness and Heyting procedures disagree".into());
            }
            (h, w)
        }
        other => return Err(format!("unknown method {other:?} (witness | heyting | both)")),
    };
    if let Some(w) = &witness {
        if !w.verify(l, q) {
            return Err("produced witness fails re-verification".into());
        }
    }
    let lv = q.levels();
    let mut out = if holds {
        CommandOutput::new("holds", format!("holds in Kr_{lv}(L)"))
    } else {
        CommandOutput::new("fails", format!("fails in Kr_{lv}(L)"))
    };
    if let Some(w) = witness {
        let names: Vec<String> = w.xs.iter().map(|&e| loaded.name_of(e)).collect();
        out.summary = format!("holds in Kr_{lv}(L) with witness [{}]", names.join(", "));
        out.witness = Some(names);
    }
    Ok(out)
}

fn parse_seq<R: Ring>(ring: &R, seq: &str) -> Result<Vec<R::Elem>, String> {
    let trimmed = seq.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|s| ring.parse_elem(s.trim()).map_err(|e| e.to_string()))
        .collect()
}

fn found_output<R: Ring>(
    ring: &R,
    cert: &krullkit_core::ring::SingularityCertificate<R::Elem>,
) -> CommandOutput {
    let json = certificate_to_json(ring, cert);
    let mut out = CommandOutput::new(
        "collapsed",
        format!(
            "sequence is singular: m = {:?}, a = [{}]",
            json.m,
            json.a.join(", ")
        ),
    );
    out.certificate = Some(json);
    out
}

fn singular_search<R: Ring>(
    ring: &R,
    seq: &str,
    bounds: &CertSearchBounds,
) -> Result<CommandOutput, String> {
    let xs = parse_seq(ring, seq)?;
    match search_certificate(ring, &xs, bounds).map_err(|e| e.to_string())? {
        SearchOutcome::Found(cert) => Ok(found_output(ring, &cert)),
        SearchOutcome::Bounded => Ok(CommandOutput::new(
            "bounded-unknown",
            "no certificate within bounds (pseudo-regular up to bounds)",
        )),
    }
}

/// Polynomial rings try the algebraic-dependence route first and fall back
/// to the bounded search.
fn singular_poly<F: krullkit_core::field::Field>(
    ring: &PolyRing<F>,
    seq: &str,
    bounds: &CertSearchBounds,
) -> Result<CommandOutput, String> {
    let xs = parse_seq(ring, seq)?;
    if xs.len() <= ring.nvars() + 1 {
        if let Some(q) = algebraic_dependence(ring, &xs).map_err(|e| e.to_string())? {
            let cert = certificate_from_dependence(ring, &q, &xs).map_err(|e| e.to_string())?;
            return Ok(found_output(ring, &cert));
        }
    }
    singular_search(ring, seq, bounds)
}

fn collapse_cmd<R: Ring>(ring: &R, json: &str, to: u8) -> Result<CommandOutput, String> {
    let parsed = formats::parse_chain(ring, json).map_err(|e| e.to_string())?;
    let chain = parsed.chain;
    let data = match (to, parsed.form1, parsed.form3) {
        (3, Some(f1), _) => {
            let f3 = collapse_1_to_3(ring, &chain, &f1).map_err(|e| e.to_string())?;
            form3_to_data(ring, &f3)
        }
        (1, _, Some(f3)) => {
            let f1 = collapse_3_to_1(ring, &chain, &f3).map_err(|e| e.to_string())?;
            form1_to_data(ring, &f1)
        }
        (1, Some(f1), _) => {
            verify_form1(ring, &chain, &f1).map_err(|e| e.to_string())?;
            form1_to_data(ring, &f1)
        }
        (3, _, Some(f3)) => {
            verify_form3(ring, &chain, &f3).map_err(|e| e.to_string())?;
            form3_to_data(ring, &f3)
        }
        (other, _, _) if other != 1 && other != 3 => {
            return Err(format!("--to wants 1 or 3, got {other}"));
        }
        _ => return Err("chain file carries no collapse data".into()),
    };
    let mut out = CommandOutput::new(
        "collapsed",
        format!("chain collapses; emitted verified form-{to} data"),
    );
    out.chain = Some(chain_to_json(ring, &chain, data));
    Ok(out)
}

fn zar_cmd<R: Ring>(ring: &R, op: &str, lhs: &str, rhs: &str) -> Result<CommandOutput, String> {
    let a = ZarElem::new(parse_seq(ring, lhs)?);
    let b = ZarElem::new(parse_seq(ring, rhs)?);
    let radical_names = |z: &ZarElem<R::Elem>| -> Vec<String> {
        let gens = ring.canonical_radical(&z.generators).unwrap_or_else(|| z.generators.clone());
        gens.iter().map(|g| ring.format_elem(g)).collect()
    };
    match op {
        "leq" => {
            let holds = zar_leq(ring, &a, &b).map_err(|e| e.to_string())?;
            Ok(if holds {
                CommandOutput::new("holds", "lhs <= rhs in Zar(R)")
            } else {
                CommandOutput::new("fails", "lhs is not below rhs in Zar(R)")
            })
        }
        "join" | "meet" | "implies" => {
            let result = match op {
                "join" => zar_join(&a, &b),
                "meet" => zar_meet(ring, &a, &b),
                _ => zar_implies_elem(ring, &a, &b).map_err(|e| e.to_string())?,
            };
            let names = radical_names(&result);
            let mut out = CommandOutput::new(
                "holds",
                format!("radical generated by [{}]", names.join(", ")),
            );
            out.zar = Some(names);
            Ok(out)
        }
        other => Err(format!("unknown op {other:?} (leq | join | meet | implies)")),
    }
}
