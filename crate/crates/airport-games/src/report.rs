//! Report rendering: fee schedules and method comparisons as table, CSV or
//! JSON, byte-deterministic for fixed input and flags.
//!
//! Movements are grouped into rows by (airline set, aircraft type) in first
//! appearance order; within a group every movement pays the same fee by
//! anonymity. Decimal output rounds fees half-even to 3 places, and *totals
//! are sums of the rounded shares* (matching how published fee tables are
//! assembled); `--exact` switches every number to exact fractions and exact
//! totals. The grand checksum renders at 2 decimals.

use crate::airport::{
    airline_totals, configuration_closed, owen_closed, shapley_closed, AirportProblem, FeeReport,
};
use crate::dataset::{coarsen_to_alliances, AllianceCoarsening, Dataset};
use crate::error::{AirportError, DatasetError};
use crate::numeric::{format_decimal, format_exact, round_half_even};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Print exact fractions instead of rounded decimals.
    pub exact: bool,
    /// Append a per-airline totals section.
    pub per_airline: bool,
    /// Add the per-(movement, airline) share decomposition to each row.
    pub split_by_airline: bool,
    pub format: OutputFormat,
}

/// One rendered section: a titled grid of cells.
#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// A report ready for rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportFile {
    pub sections: Vec<Section>,
}

impl ReportFile {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_table(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for (k, section) in self.sections.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            out.push_str(&section.title);
            out.push('\n');
            let mut widths: Vec<usize> = section.headers.iter().map(String::len).collect();
            for row in &section.rows {
                for (c, cell) in row.iter().enumerate() {
                    widths[c] = widths[c].max(cell.len());
                }
            }
            let fmt_row = |cells: &[String]| -> String {
                let mut line = String::new();
                for (c, cell) in cells.iter().enumerate() {
                    if c > 0 {
                        line.push_str("  ");
                    }
                    // left-align the first column, right-align numbers
                    if c == 0 {
                        line.push_str(&format!("{cell:<width$}", width = widths[c]));
                    } else {
                        line.push_str(&format!("{cell:>width$}", width = widths[c]));
                    }
                }
                line.trim_end().to_string()
            };
            out.push_str(&fmt_row(&section.headers));
            out.push('\n');
            for row in &section.rows {
                out.push_str(&fmt_row(row));
                out.push('\n');
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (k, section) in self.sections.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            out.push_str(&format!("# {}\n", section.title));
            out.push_str(&section.headers.join(","));
            out.push('\n');
            for row in &section.rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn render_json(&self) -> String {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let rows: Vec<Value> = s
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: serde_json::Map<String, Value> = s
                            .headers
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.clone(), Value::String(c.clone())))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                json!({ "title": s.title, "rows": rows })
            })
            .collect();
        let mut text =
            serde_json::to_string_pretty(&json!({ "sections": sections })).expect("json");
        text.push('\n');
        text
    }
}

/// Movements grouped by (airline set, type), first-appearance order.
struct Group {
    airlines: Vec<usize>,
    type_index: usize,
    members: Vec<usize>,
}

fn group_movements(p: &AirportProblem) -> Vec<Group> {
    let mut groups: Vec<Group> = Vec::new();
    for (i, m) in p.movements().iter().enumerate() {
        match groups
            .iter_mut()
            .find(|g| g.airlines == m.airlines && g.type_index == m.type_index)
        {
            Some(g) => g.members.push(i),
            None => groups.push(Group {
                airlines: m.airlines.clone(),
                type_index: m.type_index,
                members: vec![i],
            }),
        }
    }
    groups
}

fn airlines_label(p: &AirportProblem, airlines: &[usize]) -> String {
    airlines
        .iter()
        .map(|&a| p.airline_name(a))
        .collect::<Vec<_>>()
        .join(";")
}

fn type_label(p: &AirportProblem, t: usize) -> String {
    format!("{} ({})", p.type_code(t), t + 1)
}

fn fee_cell(v: &BigRational, exact: bool) -> String {
    if exact {
        format_exact(v)
    } else {
        format_decimal(v, 3)
    }
}

/// Sum of an airline's shares after rounding each to 3 decimals — the way
/// published fee tables aggregate per-airline totals.
pub fn rounded_airline_total(report: &FeeReport, airline: usize) -> BigRational {
    let mut total = BigRational::zero();
    for i in 0..report.fees().len() {
        for (a, share) in report.shares(i) {
            if *a == airline {
                total += round_half_even(share, 3);
            }
        }
    }
    total
}

/// Display total for one airline: the sum of its *rounded* shares in decimal
/// mode (how the published tables aggregate), the exact total otherwise.
fn display_airline_total(report: &FeeReport, airline: usize, exact: bool) -> BigRational {
    if exact {
        report.airline_total(airline).clone()
    } else {
        rounded_airline_total(report, airline)
    }
}

/// Builds the report for one method's fee schedule.
pub fn build_report(
    p: &AirportProblem,
    report: &FeeReport,
    currency: Option<&str>,
    opts: &ReportOptions,
) -> ReportFile {
    let exact = opts.exact;
    let mut headers = vec![
        "airlines".to_string(),
        "type".to_string(),
        "count".to_string(),
        "fee_pm".to_string(),
    ];
    if opts.split_by_airline {
        headers.push("shares".to_string());
    }
    let mut rows = Vec::new();
    for g in group_movements(p) {
        let first = g.members[0];
        let mut row = vec![
            airlines_label(p, &g.airlines),
            type_label(p, g.type_index),
            g.members.len().to_string(),
            fee_cell(report.fee(first), exact),
        ];
        if opts.split_by_airline {
            let shares = report
                .shares(first)
                .iter()
                .map(|(a, v)| format!("{}={}", p.airline_name(*a), fee_cell(v, exact)))
                .collect::<Vec<_>>()
                .join(";");
            row.push(shares);
        }
        rows.push(row);
    }
    let checksum = if exact {
        format_exact(report.checksum())
    } else {
        format_decimal(report.checksum(), 2)
    };
    let mut total_row = vec!["total".to_string(), String::new(), String::new(), checksum];
    if opts.split_by_airline {
        total_row.push(String::new());
    }
    rows.push(total_row);

    let unit = currency.map(|c| format!(" ({c})")).unwrap_or_default();
    let mut sections = vec![Section {
        title: format!("{} fees per movement{unit}", report.method()),
        headers,
        rows,
    }];

    if opts.per_airline {
        let mut rows: Vec<Vec<String>> = (0..p.airline_count())
            .map(|a| {
                let total = display_airline_total(report, a, exact);
                vec![p.airline_name(a).to_string(), fee_cell(&total, exact)]
            })
            .collect();
        let grand: BigRational = (0..p.airline_count())
            .map(|a| display_airline_total(report, a, exact))
            .sum();
        rows.push(vec![
            "total".to_string(),
            if exact {
                format_exact(&grand)
            } else {
                format_decimal(&grand, 2)
            },
        ]);
        sections.push(Section {
            title: format!("{} totals per airline{unit}", report.method()),
            headers: vec!["airline".to_string(), "total".to_string()],
            rows,
        });
    }

    ReportFile { sections }
}

/// Everything the `compare` command needs, computed once.
pub struct Comparison {
    pub problem: AirportProblem,
    pub coarse: AllianceCoarsening,
    pub cv: FeeReport,
    pub owen: FeeReport,
    pub shapley: FeeReport,
    pub reference: Option<Vec<BigRational>>,
}

/// Computes all three fee schedules on a dataset. The Owen schedule runs on
/// the alliance coarsening when an `[alliances]` section is present, and on
/// the raw airline partition otherwise (erroring under code-sharing).
pub fn compare(ds: &Dataset) -> Result<Comparison, DatasetError> {
    let problem = ds.problem.clone();
    let coarse = match &ds.alliances {
        Some(map) => coarsen_to_alliances(&problem, map)?,
        None => AllianceCoarsening {
            problem: problem.clone(),
            block_of_airline: (0..problem.airline_count()).collect(),
        },
    };
    if !coarse.problem.configuration().is_partition() {
        return Err(DatasetError::Airport(AirportError::CodeSharingPresent));
    }
    let cv = configuration_closed(&problem);
    let owen = owen_closed(&coarse.problem)?;
    let shapley = shapley_closed(&problem);
    Ok(Comparison {
        problem,
        coarse,
        cv,
        owen,
        shapley,
        reference: ds.reference_fees.clone(),
    })
}

/// Average of fees over a set of movements, on rounded fees in decimal mode.
fn average(fees: &FeeReport, members: &[usize], exact: bool) -> BigRational {
    let sum: BigRational = members
        .iter()
        .map(|&i| {
            if exact {
                fees.fee(i).clone()
            } else {
                round_half_even(fees.fee(i), 3)
            }
        })
        .sum();
    sum / BigRational::from_integer(members.len().into())
}

/// Renders the comparison: per-type fee averages across the methods, and
/// per-alliance totals.
pub fn build_comparison(cmp: &Comparison, currency: Option<&str>, opts: &ReportOptions) -> ReportFile {
    let exact = opts.exact;
    let p = &cmp.problem;
    let unit = currency.map(|c| format!(" ({c})")).unwrap_or_default();

    let mut headers = vec![
        "type".to_string(),
        "count".to_string(),
        "configuration".to_string(),
        "owen".to_string(),
        "shapley".to_string(),
    ];
    if cmp.reference.is_some() {
        headers.push("reference".to_string());
    }
    let mut rows = Vec::new();
    for t in 0..p.type_count() {
        let members: Vec<usize> = p
            .movements()
            .iter()
            .enumerate()
            .filter(|(_, m)| m.type_index == t)
            .map(|(i, _)| i)
            .collect();
        let mut row = vec![
            type_label(p, t),
            members.len().to_string(),
            fee_cell(&average(&cmp.cv, &members, exact), exact),
            fee_cell(&average(&cmp.owen, &members, exact), exact),
            fee_cell(&average(&cmp.shapley, &members, exact), exact),
        ];
        if let Some(reference) = &cmp.reference {
            row.push(fee_cell(&reference[t], exact));
        }
        rows.push(row);
    }
    let averages = Section {
        title: format!("average fees per movement{unit}"),
        headers,
        rows,
    };

    let alliance_count = cmp.coarse.problem.airline_count();
    let mut headers = vec![
        "alliance".to_string(),
        "configuration".to_string(),
        "owen".to_string(),
        "shapley".to_string(),
    ];
    if cmp.reference.is_some() {
        headers.push("reference".to_string());
    }
    let mut rows = Vec::new();
    for b in 0..alliance_count {
        // airlines of this alliance, for the configuration-value column
        let member_airlines: Vec<usize> = (0..p.airline_count())
            .filter(|&a| cmp.coarse.block_of_airline[a] == b)
            .collect();
        let cv_total: BigRational = member_airlines
            .iter()
            .map(|&a| display_airline_total(&cmp.cv, a, exact))
            .sum();
        // movements of this alliance, for the per-movement columns
        let members: Vec<usize> = cmp
            .coarse
            .problem
            .movements()
            .iter()
            .enumerate()
            .filter(|(_, m)| m.airlines.contains(&b))
            .map(|(i, _)| i)
            .collect();
        let sum_over = |fees: &FeeReport| -> BigRational {
            members
                .iter()
                .map(|&i| {
                    if exact {
                        fees.fee(i).clone()
                    } else {
                        round_half_even(fees.fee(i), 3)
                    }
                })
                .sum()
        };
        let mut row = vec![
            cmp.coarse.problem.airline_name(b).to_string(),
            fee_cell(&cv_total, exact),
            fee_cell(&sum_over(&cmp.owen), exact),
            fee_cell(&sum_over(&cmp.shapley), exact),
        ];
        if let Some(reference) = &cmp.reference {
            let total: BigRational = members
                .iter()
                .map(|&i| {
                    let fee = &reference[p.movements()[i].type_index];
                    if exact {
                        fee.clone()
                    } else {
                        round_half_even(fee, 3)
                    }
                })
                .sum();
            row.push(fee_cell(&total, exact));
        }
        rows.push(row);
    }
    let totals = Section {
        title: format!("total fees per alliance{unit}"),
        headers,
        rows,
    };

    ReportFile {
        sections: vec![averages, totals],
    }
}

/// Convenience used by the CLI and tests: the per-airline totals section of
/// the spec's `airline_totals` operation, as (name, exact total) pairs.
pub fn exact_airline_totals(
    p: &AirportProblem,
    report: &FeeReport,
) -> Result<Vec<(String, BigRational)>, AirportError> {
    airline_totals(p, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::parse_dataset_str;

    const EXAMPLE: &str = "\
[meta]
currency,units

[types]
code,rank,cost
T1,1,10
T2,2,20
T3,3,22

[movements]
id,type,airlines
m1,T1,a1
m2,T2,a2;a3
m3,T3,a2
m4,T2,a3
";

    #[test]
    fn table_report_for_the_example() {
        let ds = parse_dataset_str(EXAMPLE).unwrap();
        let report = configuration_closed(&ds.problem);
        let opts = ReportOptions {
            per_airline: true,
            ..Default::default()
        };
        let text = build_report(&ds.problem, &report, ds.currency.as_deref(), &opts)
            .render(OutputFormat::Table);
        assert!(text.contains("configuration fees per movement (units)"), "{text}");
        assert!(text.contains("a2;a3"), "{text}");
        assert!(text.contains("8.333"), "{text}"); // 50/6
        assert!(text.contains("22.00"), "{text}"); // checksum at 2 decimals
        assert!(text.contains("totals per airline"), "{text}");
    }

    #[test]
    fn exact_mode_prints_fractions() {
        let ds = parse_dataset_str(EXAMPLE).unwrap();
        let report = configuration_closed(&ds.problem);
        let opts = ReportOptions {
            exact: true,
            split_by_airline: true,
            ..Default::default()
        };
        let text = build_report(&ds.problem, &report, None, &opts).render(OutputFormat::Csv);
        assert!(text.contains("25/3"), "{text}");
        assert!(text.contains("a2=25/6;a3=25/6"), "{text}");
    }

    #[test]
    fn rendering_is_deterministic() {
        let ds = parse_dataset_str(EXAMPLE).unwrap();
        let report = configuration_closed(&ds.problem);
        let opts = ReportOptions {
            per_airline: true,
            split_by_airline: true,
            format: OutputFormat::Json,
            ..Default::default()
        };
        let a = build_report(&ds.problem, &report, None, &opts).render(OutputFormat::Json);
        let b = build_report(&ds.problem, &report, None, &opts).render(OutputFormat::Json);
        assert_eq!(a, b);
        assert!(serde_json::from_str::<serde_json::Value>(&a).is_ok());
    }

    #[test]
    fn comparison_on_a_single_airline_dataset_coincides() {
        let text = "\
[types]
code,rank,cost
T1,1,10
T2,2,30

[movements]
id,type,airlines
m1,T1,solo
m2,T2,solo
m3,T2,solo
";
        let ds = parse_dataset_str(text).unwrap();
        let cmp = compare(&ds).unwrap();
        // with one airline and no code-sharing, all three methods coincide
        assert_eq!(cmp.cv.fees(), cmp.shapley.fees());
        assert_eq!(cmp.owen.fees(), cmp.shapley.fees());
        let rendered = build_comparison(&cmp, None, &ReportOptions::default())
            .render(OutputFormat::Table);
        assert!(rendered.contains("average fees per movement"), "{rendered}");
    }

    #[test]
    fn comparison_requires_a_partition() {
        let ds = parse_dataset_str(EXAMPLE).unwrap();
        assert!(matches!(
            compare(&ds),
            Err(DatasetError::Airport(AirportError::CodeSharingPresent))
        ));
    }

    /// The fee column, weighted by counts, sums back to the grand total:
    /// exactly in exact mode, to rendering precision otherwise.
    #[test]
    fn fee_column_sums_to_the_checksum() {
        use crate::numeric::{parse_decimal, rat};
        let ds = parse_dataset_str(EXAMPLE).unwrap();
        let report = configuration_closed(&ds.problem);
        for exact in [false, true] {
            let opts = ReportOptions {
                exact,
                ..Default::default()
            };
            let csv = build_report(&ds.problem, &report, None, &opts).render(OutputFormat::Csv);
            let mut sum = rat(0, 1);
            let mut checksum = None;
            for line in csv.lines().skip(2) {
                let cells: Vec<&str> = line.split(',').collect();
                let parse = |s: &str| {
                    parse_decimal(s).unwrap_or_else(|| {
                        let (n, d) = s.split_once('/').unwrap();
                        rat(n.parse().unwrap(), d.parse().unwrap())
                    })
                };
                if cells[0] == "total" {
                    checksum = Some(parse(cells[3]));
                } else {
                    let count: i64 = cells[2].parse().unwrap();
                    sum += parse(cells[3]) * rat(count, 1);
                }
            }
            let checksum = checksum.expect("total row present");
            if exact {
                assert_eq!(sum, checksum);
                assert_eq!(sum, rat(22, 1));
            } else {
                let diff = &sum - &checksum;
                let diff = if diff < rat(0, 1) { -diff } else { diff };
                // at 3-decimal rendering, each of the 4 rows is off by < 5e-4
                assert!(diff <= rat(2, 1000), "residual {diff}");
            }
        }
    }
}
