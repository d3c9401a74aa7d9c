//! JSON file formats: lattices (poset or raw tables), Kr queries, axiom
//! sets, ring chains with collapse data, and certificates.
//!
//! Lattice elements are externally named by the hex string of their downset
//! bitmask (`0x5`); a lattice loaded from raw tables also accepts its
//! original element names.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use krullkit_core::entailment::{EntailmentAxioms, GeneratorSet, Sequent};
use krullkit_core::lattice::{
    validate_raw_lattice, ElemId, FiniteDistLattice, Poset, RawLattice,
};
use krullkit_core::ring::{Form1, Form3, Form3Row, Ring, RingChain, SingularityCertificate};

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

// ----- lattice files -----

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeFile {
    Poset { poset: PosetDto },
    Raw {
        elements: Vec<String>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PosetDto {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
}

/// A lattice plus its external naming.
#[derive(Debug)]
pub struct LoadedLattice {
    pub lattice: FiniteDistLattice,
    /// Extra names (from raw-table files) resolving to elements.
    pub names: BTreeMap<String, ElemId>,
}

impl LoadedLattice {
    pub fn resolve(&self, name: &str) -> Result<ElemId, FormatError> {
        if let Some(hex) = name.strip_prefix("0x") {
            let mask = u64::from_str_radix(hex, 16)
                .map_err(|_| FormatError(format!("bad element name {name:?}")))?;
            return self
                .lattice
                .elem_of_mask(mask)
                .ok_or_else(|| FormatError(format!("no element with mask {name}")));
        }
        self.names
            .get(name)
            .copied()
            .ok_or_else(|| FormatError(format!("unknown element {name:?}")))
    }

    pub fn name_of(&self, e: ElemId) -> String {
        format!("0x{:x}", self.lattice.mask(e))
    }
}

pub fn parse_lattice(json: &str) -> Result<LoadedLattice, FormatError> {
    let file: LatticeFile =
        serde_json::from_str(json).map_err(|e| FormatError(format!("lattice file: {e}")))?;
    match file {
        LatticeFile::Poset { poset } => {
            let p = Poset::new(poset.size, poset.covers)
                .map_err(|e| FormatError(format!("poset: {e}")))?;
            let lattice =
                FiniteDistLattice::from_poset(p).map_err(|e| FormatError(format!("{e}")))?;
            Ok(LoadedLattice { lattice, names: BTreeMap::new() })
        }
        LatticeFile::Raw { elements, meet, join } => {
            let raw = RawLattice { size: elements.len(), meet, join };
            let (lattice, map) =
                validate_raw_lattice(&raw).map_err(|e| FormatError(format!("{e}")))?;
            let names = elements
                .into_iter()
                .enumerate()
                .map(|(i, name)| (name, map[i]))
                .collect();
            Ok(LoadedLattice { lattice, names })
        }
    }
}

// ----- Kr query files -----

#[derive(Debug, Serialize, Deserialize)]
pub struct QueryFile {
    pub levels: usize,
    #[serde(rename = "U")]
    pub u: Vec<Vec<String>>,
    #[serde(rename = "J")]
    pub j: Vec<Vec<String>>,
}

pub fn parse_query(
    json: &str,
    lattice: &LoadedLattice,
) -> Result<krullkit_core::krull::KrQuery, FormatError> {
    let file: QueryFile =
        serde_json::from_str(json).map_err(|e| FormatError(format!("query file: {e}")))?;
    if file.u.len() != file.levels + 1 || file.j.len() != file.levels + 1 {
        return err("query: U and J must list levels + 1 sets");
    }
    let resolve_all = |sets: &[Vec<String>]| -> Result<Vec<Vec<ElemId>>, FormatError> {
        sets.iter()
            .map(|set| set.iter().map(|n| lattice.resolve(n)).collect())
            .collect()
    };
    krullkit_core::krull::KrQuery::new(resolve_all(&file.u)?, resolve_all(&file.j)?)
        .map_err(|e| FormatError(format!("{e}")))
}

// ----- axiom files -----

#[derive(Debug, Serialize, Deserialize)]
pub struct AxiomFile {
    pub generators: Vec<String>,
    pub axioms: Vec<AxiomDto>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AxiomDto {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

pub fn parse_axioms(json: &str) -> Result<EntailmentAxioms, FormatError> {
    let file: AxiomFile =
        serde_json::from_str(json).map_err(|e| FormatError(format!("axiom file: {e}")))?;
    let gens = GeneratorSet::new(file.generators).map_err(|e| FormatError(format!("{e}")))?;
    let mut axioms = Vec::with_capacity(file.axioms.len());
    for ax in &file.axioms {
        let lhs = gens.mask_of(&ax.lhs).map_err(|e| FormatError(format!("{e}")))?;
        let rhs = gens.mask_of(&ax.rhs).map_err(|e| FormatError(format!("{e}")))?;
        axioms.push(Sequent::new(lhs, rhs));
    }
    EntailmentAxioms::new(gens, axioms).map_err(|e| FormatError(format!("{e}")))
}

pub fn format_axioms(ax: &EntailmentAxioms) -> AxiomFile {
    let names = ax.generators().names();
    let list = |mask: u32| -> Vec<String> {
        (0..names.len())
            .filter(|g| mask >> g & 1 == 1)
            .map(|g| names[g].clone())
            .collect()
    };
    AxiomFile {
        generators: names.to_vec(),
        axioms: ax
            .axioms()
            .iter()
            .map(|s| AxiomDto { lhs: list(s.lhs), rhs: list(s.rhs) })
            .collect(),
    }
}

// ----- certificates -----

#[derive(Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub m: Vec<u32>,
    pub a: Vec<String>,
}

pub fn certificate_to_json<R: Ring>(
    ring: &R,
    cert: &SingularityCertificate<R::Elem>,
) -> CertificateJson {
    CertificateJson {
        m: cert.exponents.clone(),
        a: cert.coefficients.iter().map(|c| ring.format_elem(c)).collect(),
    }
}

pub fn certificate_from_json<R: Ring>(
    ring: &R,
    json: &CertificateJson,
) -> Result<SingularityCertificate<R::Elem>, FormatError> {
    let coefficients = json
        .a
        .iter()
        .map(|s| ring.parse_elem(s))
        .collect::<Result<_, _>>()
        .map_err(|e| FormatError(format!("{e}")))?;
    Ok(SingularityCertificate { exponents: json.m.clone(), coefficients })
}

// ----- ring chains with collapse data -----

#[derive(Debug, Serialize, Deserialize)]
pub struct ChainFile {
    #[serde(rename = "J")]
    pub j: Vec<Vec<String>>,
    #[serde(rename = "U")]
    pub u: Vec<Vec<String>>,
    pub data: ChainData,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "form")]
pub enum ChainData {
    #[serde(rename = "1")]
    Form1 {
        u_exps: Vec<Vec<u32>>,
        j_cofs: Vec<Vec<String>>,
    },
    #[serde(rename = "3")]
    Form3 {
        xs: Vec<String>,
        rows: Vec<RowDto>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RowDto {
    pub x_power: Option<u32>,
    pub u_exps: Vec<u32>,
    pub j_cofs: Vec<String>,
    pub x_cofactor: Option<String>,
}

pub struct ParsedChain<E> {
    pub chain: RingChain<E>,
    pub form1: Option<Form1<E>>,
    pub form3: Option<Form3<E>>,
}

pub fn parse_chain<R: Ring>(ring: &R, json: &str) -> Result<ParsedChain<R::Elem>, FormatError> {
    let file: ChainFile =
        serde_json::from_str(json).map_err(|e| FormatError(format!("chain file: {e}")))?;
    let parse_sets = |sets: &[Vec<String>]| -> Result<Vec<Vec<R::Elem>>, FormatError> {
        sets.iter()
            .map(|set| {
                set.iter()
                    .map(|s| ring.parse_elem(s).map_err(|e| FormatError(format!("{e}"))))
                    .collect()
            })
            .collect()
    };
    let chain = RingChain { j_levels: parse_sets(&file.j)?, u_levels: parse_sets(&file.u)? };
    let parse_elems = |v: &[String]| -> Result<Vec<R::Elem>, FormatError> {
        v.iter()
            .map(|s| ring.parse_elem(s).map_err(|e| FormatError(format!("{e}"))))
            .collect()
    };
    match file.data {
        ChainData::Form1 { u_exps, j_cofs } => {
            let j_cofs = j_cofs
                .iter()
                .map(|v| parse_elems(v))
                .collect::<Result<_, _>>()?;
            Ok(ParsedChain { chain, form1: Some(Form1 { u_exps, j_cofs }), form3: None })
        }
        ChainData::Form3 { xs, rows } => {
            let rows = rows
                .iter()
                .map(|row| {
                    Ok(Form3Row {
                        x_power: row.x_power,
                        u_exps: row.u_exps.clone(),
                        j_cofs: parse_elems(&row.j_cofs)?,
                        x_cofactor: row
                            .x_cofactor
                            .as_ref()
                            .map(|s| ring.parse_elem(s))
                            .transpose()
                            .map_err(|e| FormatError(format!("{e}")))?,
                    })
                })
                .collect::<Result<_, FormatError>>()?;
            Ok(ParsedChain {
                chain,
                form1: None,
                form3: Some(Form3 { xs: parse_elems(&xs)?, rows }),
            })
        }
    }
}

pub fn chain_to_json<R: Ring>(
    ring: &R,
    chain: &RingChain<R::Elem>,
    data: ChainData,
) -> ChainFile {
    let fmt_sets = |sets: &[Vec<R::Elem>]| -> Vec<Vec<String>> {
        sets.iter()
            .map(|set| set.iter().map(|e| ring.format_elem(e)).collect())
            .collect()
    };
    ChainFile { j: fmt_sets(&chain.j_levels), u: fmt_sets(&chain.u_levels), data }
}

pub fn form1_to_data<R: Ring>(ring: &R, f1: &Form1<R::Elem>) -> ChainData {
    ChainData::Form1 {
        u_exps: f1.u_exps.clone(),
        j_cofs: f1
            .j_cofs
            .iter()
            .map(|v| v.iter().map(|c| ring.format_elem(c)).collect())
            .collect(),
    }
}

pub fn form3_to_data<R: Ring>(ring: &R, f3: &Form3<R::Elem>) -> ChainData {
    ChainData::Form3 {
        xs: f3.xs.iter().map(|x| ring.format_elem(x)).collect(),
        rows: f3
            .rows
            .iter()
            .map(|row| RowDto {
                x_power: row.x_power,
                u_exps: row.u_exps.clone(),
                j_cofs: row.j_cofs.iter().map(|c| ring.format_elem(c)).collect(),
                x_cofactor: row.x_cofactor.as_ref().map(|c| ring.format_elem(c)),
            })
            .collect(),
    }
}

// ----- command output -----

/// Machine-readable command result; `status` drives the exit code
/// (holds/collapsed = 0, fails = 1, bounded-unknown = 2).
#[derive(Debug, Serialize)]
pub struct CommandOutput {
    pub status: String,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zar: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainFile>,
}

impl CommandOutput {
    pub fn new(status: impl Into<String>, summary: impl Into<String>) -> Self {
        CommandOutput {
            status: status.into(),
            summary: summary.into(),
            dimension: None,
            witness: None,
            certificate: None,
            zar: None,
            chain: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status.as_str() {
            "holds" | "collapsed" => 0,
            "fails" => 1,
            "bounded-unknown" => 2,
            _ => 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_lattice_round_trip_and_hex_names() {
        let loaded = parse_lattice(r#"{"poset": {"size": 2, "covers": [[0, 1]]}}"#).unwrap();
        assert_eq!(loaded.lattice.len(), 3);
        assert_eq!(loaded.resolve("0x0").unwrap(), loaded.lattice.zero());
        assert_eq!(loaded.resolve("0x3").unwrap(), loaded.lattice.one());
        assert!(loaded.resolve("0x2").is_err());
        assert_eq!(loaded.name_of(loaded.lattice.one()), "0x3");
    }

    #[test]
    fn raw_lattice_accepts_names() {
        let json = r#"{
            "elements": ["bot", "mid", "top"],
            "meet": [[0,0,0],[0,1,1],[0,1,2]],
            "join": [[0,1,2],[1,1,2],[2,2,2]]
        }"#;
        let loaded = parse_lattice(json).unwrap();
        assert_eq!(loaded.lattice.len(), 3);
        assert_eq!(loaded.resolve("bot").unwrap(), loaded.lattice.zero());
        assert_eq!(loaded.resolve("top").unwrap(), loaded.lattice.one());
    }

    #[test]
    fn nondistributive_raw_lattice_reports_triple() {
        // M3 as raw tables.
        let n = 5usize;
        let meet: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        if x == y { x } else if x == 0 || y == 0 { 0 }
                        else if x == 4 { y } else if y == 4 { x } else { 0 }
                    })
                    .collect()
            })
            .collect();
        let join: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        if x == y { x } else if x == 4 || y == 4 { 4 }
                        else if x == 0 { y } else if y == 0 { x } else { 4 }
                    })
                    .collect()
            })
            .collect();
        let json = serde_json::json!({
            "elements": ["0", "a", "b", "c", "1"],
            "meet": meet,
            "join": join,
        });
        let e = parse_lattice(&json.to_string()).unwrap_err();
        assert!(e.0.contains("distributivity"), "{e}");
    }

    #[test]
    fn query_file_resolves_names() {
        let loaded = parse_lattice(r#"{"poset": {"size": 2, "covers": [[0, 1]]}}"#).unwrap();
        let q = parse_query(
            r#"{"levels": 1, "U": [["0x1"], []], "J": [[], ["0x1"]]}"#,
            &loaded,
        )
        .unwrap();
        assert_eq!(q.levels(), 1);
    }

    #[test]
    fn axiom_file_round_trip() {
        let json = r#"{"generators": ["a", "b"], "axioms": [{"lhs": ["a"], "rhs": ["b"]}]}"#;
        let ax = parse_axioms(json).unwrap();
        assert_eq!(ax.axioms().len(), 1);
        assert_eq!(ax.axioms()[0], Sequent::new(0b01, 0b10));
        let back = format_axioms(&ax);
        let reparsed = parse_axioms(&serde_json::to_string(&back).unwrap()).unwrap();
        assert_eq!(ax, reparsed);
    }

    #[test]
    fn chain_file_form1_parses() {
        use krullkit_core::ring::Integers;
        let json = r#"{
            "J": [["6"], []],
            "U": [["2"], ["3"]],
            "data": {"form": "1", "u_exps": [[1], [1]], "j_cofs": [["-1"], []]}
        }"#;
        let parsed = parse_chain(&Integers, json).unwrap();
        assert_eq!(parsed.chain.levels(), 1);
        let f1 = parsed.form1.unwrap();
        krullkit_core::ring::verify_form1(&Integers, &parsed.chain, &f1).unwrap();
    }
}
