//! Reading and writing airport datasets.
//!
//! One self-contained UTF-8 file with comma-separated sections:
//!
//! ```text
//! [meta]
//! total_fee,42310.79
//! currency,EUR
//!
//! [types]
//! code,rank,weight          # or: code,rank,cost
//! LJ45,1,9.752
//!
//! [movements]
//! id,type,airlines          # airlines separated by ';'
//! m001,B738,Ryanair
//! m031,A320,Vueling;Iberia
//!
//! [alliances]               # optional
//! airline,alliance
//! Vueling,OneWorld
//!
//! [reference_fees]          # optional
//! code,fee
//! LJ45,43.3412
//! ```
//!
//! `#` starts a comment. Types carry either take-off weights (costs derived
//! as `total_fee · w/w_max`) or explicit costs — exactly one mode per file.
//! Airline and alliance ordering is first appearance.

use crate::airport::{costs_from_weights, AirportProblem, Movement};
use crate::error::DatasetError;
use crate::numeric::{format_shortest_decimal, parse_decimal};
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::path::Path;

/// A parsed dataset: the airport problem plus the optional side tables.
#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    pub problem: AirportProblem,
    /// Present in weight mode; aligned with the problem's (compacted) types.
    pub weights: Option<Vec<BigRational>>,
    pub total_fee: Option<BigRational>,
    pub currency: Option<String>,
    /// `(airline, alliance)` rows in file order.
    pub alliances: Option<Vec<(String, String)>>,
    /// Per-type reference fees (e.g. the regulator's published schedule),
    /// aligned with the problem's types.
    pub reference_fees: Option<Vec<BigRational>>,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Meta,
    Types,
    Movements,
    Alliances,
    ReferenceFees,
}

#[derive(Clone, Copy, PartialEq)]
enum TypeMode {
    Weight,
    Cost,
}

struct TypeRow {
    code: String,
    rank: i64,
    value: BigRational,
}

pub fn parse_dataset(path: impl AsRef<Path>) -> Result<Dataset, DatasetError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_dataset_str(&text)
}

pub fn parse_dataset_str(text: &str) -> Result<Dataset, DatasetError> {
    let mut section = Section::None;
    let mut seen_sections = std::collections::BTreeSet::new();
    let mut expecting_header = false;
    let mut type_mode = None;
    let mut meta: BTreeMap<String, (String, usize)> = BTreeMap::new();
    let mut type_rows: Vec<TypeRow> = Vec::new();
    let mut movement_rows: Vec<(String, String, Vec<String>, usize)> = Vec::new();
    let mut alliance_rows: Vec<(String, String)> = Vec::new();
    let mut reference_rows: Vec<(String, BigRational, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = match name {
                "meta" => Section::Meta,
                "types" => Section::Types,
                "movements" => Section::Movements,
                "alliances" => Section::Alliances,
                "reference_fees" => Section::ReferenceFees,
                other => {
                    return Err(DatasetError::malformed(
                        line_no,
                        format!("unknown section [{other}]"),
                    ))
                }
            };
            if !seen_sections.insert(name.to_string()) {
                return Err(DatasetError::malformed(
                    line_no,
                    format!("duplicate section [{name}]"),
                ));
            }
            expecting_header = section != Section::Meta;
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if expecting_header {
            expecting_header = false;
            match section {
                Section::Types => {
                    type_mode = match fields.as_slice() {
                        ["code", "rank", "weight"] => Some(TypeMode::Weight),
                        ["code", "rank", "cost"] => Some(TypeMode::Cost),
                        _ => {
                            return Err(DatasetError::malformed(
                                line_no,
                                "expected header 'code,rank,weight' or 'code,rank,cost'",
                            ))
                        }
                    };
                }
                Section::Movements if fields != ["id", "type", "airlines"] => {
                    return Err(DatasetError::malformed(
                        line_no,
                        "expected header 'id,type,airlines'",
                    ))
                }
                Section::Alliances if fields != ["airline", "alliance"] => {
                    return Err(DatasetError::malformed(
                        line_no,
                        "expected header 'airline,alliance'",
                    ))
                }
                Section::ReferenceFees if fields != ["code", "fee"] => {
                    return Err(DatasetError::malformed(line_no, "expected header 'code,fee'"))
                }
                _ => {}
            }
            continue;
        }
        match section {
            Section::None => {
                return Err(DatasetError::malformed(
                    line_no,
                    "data before any [section] header",
                ))
            }
            Section::Meta => {
                let [key, value] = fields.as_slice() else {
                    return Err(DatasetError::malformed(line_no, "expected 'key,value'"));
                };
                meta.insert(key.to_string(), (value.to_string(), line_no));
            }
            Section::Types => {
                let [code, rank, value] = fields.as_slice() else {
                    return Err(DatasetError::malformed(
                        line_no,
                        "expected 'code,rank,value'",
                    ));
                };
                let rank: i64 = rank.parse().map_err(|_| {
                    DatasetError::malformed(line_no, format!("bad rank {rank:?}"))
                })?;
                let value = parse_decimal(value).ok_or_else(|| {
                    DatasetError::malformed(line_no, format!("bad number {value:?}"))
                })?;
                if type_rows.iter().any(|t| t.code == *code) {
                    return Err(DatasetError::malformed(
                        line_no,
                        format!("duplicate type code {code:?}"),
                    ));
                }
                if type_rows.iter().any(|t| t.rank == rank) {
                    return Err(DatasetError::malformed(
                        line_no,
                        format!("duplicate type rank {rank}"),
                    ));
                }
                type_rows.push(TypeRow {
                    code: code.to_string(),
                    rank,
                    value,
                });
            }
            Section::Movements => {
                let [id, type_code, airlines] = fields.as_slice() else {
                    return Err(DatasetError::malformed(
                        line_no,
                        "expected 'id,type,airlines'",
                    ));
                };
                let airlines: Vec<String> = airlines
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                if airlines.is_empty() {
                    return Err(DatasetError::malformed(
                        line_no,
                        format!("movement {id:?} has an empty airline list"),
                    ));
                }
                movement_rows.push((id.to_string(), type_code.to_string(), airlines, line_no));
            }
            Section::Alliances => {
                let [airline, alliance] = fields.as_slice() else {
                    return Err(DatasetError::malformed(
                        line_no,
                        "expected 'airline,alliance'",
                    ));
                };
                if alliance_rows.iter().any(|(a, _)| a == airline) {
                    return Err(DatasetError::malformed(
                        line_no,
                        format!("airline {airline:?} mapped to an alliance twice"),
                    ));
                }
                alliance_rows.push((airline.to_string(), alliance.to_string()));
            }
            Section::ReferenceFees => {
                let [code, fee] = fields.as_slice() else {
                    return Err(DatasetError::malformed(line_no, "expected 'code,fee'"));
                };
                let fee = parse_decimal(fee).ok_or_else(|| {
                    DatasetError::malformed(line_no, format!("bad number {fee:?}"))
                })?;
                reference_rows.push((code.to_string(), fee, line_no));
            }
        }
    }

    if type_rows.is_empty() {
        return Err(DatasetError::MissingTypes);
    }
    if movement_rows.is_empty() {
        return Err(DatasetError::MissingMovements);
    }
    let type_mode = type_mode.expect("mode fixed by the types header");
    type_rows.sort_by_key(|t| t.rank);

    let total_fee = match meta.get("total_fee") {
        Some((raw, line)) => Some(parse_decimal(raw).ok_or_else(|| {
            DatasetError::malformed(*line, format!("bad total_fee {raw:?}"))
        })?),
        None => None,
    };
    let currency = meta.get("currency").map(|(v, _)| v.clone());

    let (costs, weights) = match type_mode {
        TypeMode::Weight => {
            let total = total_fee.clone().ok_or(DatasetError::MissingTotalFee)?;
            let weights: Vec<BigRational> = type_rows.iter().map(|t| t.value.clone()).collect();
            let costs = costs_from_weights(&weights, &total)?;
            (costs, Some(weights))
        }
        TypeMode::Cost => (
            type_rows.iter().map(|t| t.value.clone()).collect(),
            None,
        ),
    };

    let type_index: BTreeMap<&str, usize> = type_rows
        .iter()
        .enumerate()
        .map(|(i, t)| (t.code.as_str(), i))
        .collect();
    let mut airline_names: Vec<String> = Vec::new();
    let mut airline_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut movements = Vec::with_capacity(movement_rows.len());
    for (id, type_code, airlines, line) in &movement_rows {
        let &t = type_index.get(type_code.as_str()).ok_or_else(|| {
            DatasetError::malformed(*line, format!("unknown type code {type_code:?}"))
        })?;
        let mut indices = Vec::with_capacity(airlines.len());
        for a in airlines {
            let idx = *airline_index.entry(a.clone()).or_insert_with(|| {
                airline_names.push(a.clone());
                airline_names.len() - 1
            });
            indices.push(idx);
        }
        movements.push(Movement::new(id.clone(), t, indices));
    }

    let types: Vec<(String, BigRational)> = type_rows
        .iter()
        .map(|t| t.code.clone())
        .zip(costs)
        .collect();
    let used_codes: Vec<String> = {
        let used: std::collections::BTreeSet<usize> =
            movements.iter().map(|m| m.type_index).collect();
        used.iter().map(|&t| type_rows[t].code.clone()).collect()
    };
    let weights = weights.map(|w| {
        let used: std::collections::BTreeSet<usize> =
            movements.iter().map(|m| m.type_index).collect();
        used.iter().map(|&t| w[t].clone()).collect()
    });
    let problem = AirportProblem::new(types, movements, airline_names)?;

    let alliances = if alliance_rows.is_empty() {
        None
    } else {
        for (airline, _) in &alliance_rows {
            if !problem.airline_names().contains(airline) {
                return Err(DatasetError::Airport(
                    crate::error::AirportError::UnusedAirline {
                        name: airline.clone(),
                    },
                ));
            }
        }
        Some(alliance_rows)
    };

    let reference_fees = if reference_rows.is_empty() {
        None
    } else {
        let by_code: BTreeMap<&str, &BigRational> = reference_rows
            .iter()
            .map(|(c, f, _)| (c.as_str(), f))
            .collect();
        let mut fees = Vec::with_capacity(problem.type_count());
        for code in &used_codes {
            match by_code.get(code.as_str()) {
                Some(&fee) => fees.push(fee.clone()),
                None => {
                    let line = reference_rows.last().map(|r| r.2).unwrap_or(0);
                    return Err(DatasetError::malformed(
                        line,
                        format!("no reference fee for type {code:?}"),
                    ));
                }
            }
        }
        Some(fees)
    };

    Ok(Dataset {
        problem,
        weights,
        total_fee,
        currency,
        alliances,
        reference_fees,
    })
}

/// Canonical text form; `parse(emit(parse(f)))` equals `parse(f)`.
pub fn emit_dataset(ds: &Dataset) -> String {
    let mut out = String::new();
    let dec = |r: &BigRational| {
        format_shortest_decimal(r).expect("dataset numbers have terminating decimals")
    };
    if ds.total_fee.is_some() || ds.currency.is_some() {
        out.push_str("[meta]\n");
        if let Some(t) = &ds.total_fee {
            out.push_str(&format!("total_fee,{}\n", dec(t)));
        }
        if let Some(c) = &ds.currency {
            out.push_str(&format!("currency,{c}\n"));
        }
        out.push('\n');
    }
    out.push_str("[types]\n");
    match &ds.weights {
        Some(weights) => {
            out.push_str("code,rank,weight\n");
            for (t, w) in weights.iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", ds.problem.type_code(t), t + 1, dec(w)));
            }
        }
        None => {
            out.push_str("code,rank,cost\n");
            for t in 0..ds.problem.type_count() {
                out.push_str(&format!(
                    "{},{},{}\n",
                    ds.problem.type_code(t),
                    t + 1,
                    dec(ds.problem.type_cost(t))
                ));
            }
        }
    }
    out.push_str("\n[movements]\nid,type,airlines\n");
    for m in ds.problem.movements() {
        let airlines: Vec<&str> = m
            .airlines
            .iter()
            .map(|&a| ds.problem.airline_name(a))
            .collect();
        out.push_str(&format!(
            "{},{},{}\n",
            m.id,
            ds.problem.type_code(m.type_index),
            airlines.join(";")
        ));
    }
    if let Some(alliances) = &ds.alliances {
        out.push_str("\n[alliances]\nairline,alliance\n");
        for (airline, alliance) in alliances {
            out.push_str(&format!("{airline},{alliance}\n"));
        }
    }
    if let Some(fees) = &ds.reference_fees {
        out.push_str("\n[reference_fees]\ncode,fee\n");
        for (t, fee) in fees.iter().enumerate() {
            out.push_str(&format!("{},{}\n", ds.problem.type_code(t), dec(fee)));
        }
    }
    out
}

/// An airline → alliance coarsening of a problem.
#[derive(Clone, Debug)]
pub struct AllianceCoarsening {
    /// The problem with alliances as its airline blocks.
    pub problem: AirportProblem,
    /// For each original airline, its alliance-block index in `problem`.
    pub block_of_airline: Vec<usize>,
}

/// Groups the problem's airlines into alliance blocks: mapped airlines merge
/// under their alliance name (first-appearance order of the mapping), and
/// unmapped airlines stay as singleton blocks after them, in airline order.
pub fn coarsen_to_alliances(
    problem: &AirportProblem,
    alliances: &[(String, String)],
) -> Result<AllianceCoarsening, DatasetError> {
    let mut block_names: Vec<String> = Vec::new();
    let mut block_of_airline: Vec<Option<usize>> = vec![None; problem.airline_count()];
    for (airline, alliance) in alliances {
        let a = problem
            .airline_names()
            .iter()
            .position(|n| n == airline)
            .ok_or_else(|| {
                DatasetError::Airport(crate::error::AirportError::UnusedAirline {
                    name: airline.clone(),
                })
            })?;
        let idx = match block_names.iter().position(|n| n == alliance) {
            Some(i) => i,
            None => {
                block_names.push(alliance.clone());
                block_names.len() - 1
            }
        };
        block_of_airline[a] = Some(idx);
    }
    for (a, block) in block_of_airline.iter_mut().enumerate() {
        if block.is_none() {
            block_names.push(problem.airline_name(a).to_string());
            *block = Some(block_names.len() - 1);
        }
    }
    let block_of_airline: Vec<usize> = block_of_airline.into_iter().map(|b| b.unwrap()).collect();
    let movements = problem
        .movements()
        .iter()
        .map(|m| {
            Movement::new(
                m.id.clone(),
                m.type_index,
                m.airlines.iter().map(|&a| block_of_airline[a]),
            )
        })
        .collect();
    let types = (0..problem.type_count())
        .map(|t| (problem.type_code(t).to_string(), problem.type_cost(t).clone()))
        .collect();
    Ok(AllianceCoarsening {
        problem: AirportProblem::new(types, movements, block_names)?,
        block_of_airline,
    })
}
