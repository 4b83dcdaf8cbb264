//! Report serialization: the fixed-schema CSV and its JSON mirror with full
//! per-run detail.

use std::fmt::Write as _;

use crate::harness::BenchmarkReport;

pub const CSV_HEADER: &str = "instance,best,avg,std,worst,opt_reached,runs,mean_seconds";

/// Renders the aggregate rows. `avg` and `std` use fixed two-decimal
/// formatting; `opt_reached` stays empty when no known gamma was configured.
pub fn report_to_csv(report: &BenchmarkReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let opt = row.opt_reached.map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{:.2},{:.2},{},{},{},{:.4}",
            row.name, row.best, row.avg, row.std, row.worst, opt, row.runs, row.mean_seconds
        );
    }
    out
}

/// Full mirror including per-run histories, dominator lists, and failures.
pub fn report_to_json(report: &BenchmarkReport) -> serde_json::Value {
    serde_json::to_value(report).expect("report serializes")
}

/// Drops the wall-clock column so reports can be compared for determinism.
pub fn csv_without_timing(csv: &str) -> String {
    csv.lines()
        .map(|line| match line.rsplit_once(',') {
            Some((rest, _time)) => rest.to_string(),
            None => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Minimal parser for the report schema, used by round-trip tests and the
/// stats front end.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvRow {
    pub instance: String,
    pub best: usize,
    pub avg: f64,
    pub std: f64,
    pub worst: usize,
    pub opt_reached: Option<usize>,
    pub runs: usize,
    pub mean_seconds: f64,
}

pub fn parse_report_csv(text: &str) -> anyhow::Result<Vec<CsvRow>> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| anyhow::anyhow!("empty CSV"))?;
    if header != CSV_HEADER {
        anyhow::bail!("unexpected header {header:?}");
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            anyhow::bail!("row {} has {} fields, expected 8", i + 2, fields.len());
        }
        rows.push(CsvRow {
            instance: fields[0].to_string(),
            best: fields[1].parse()?,
            avg: fields[2].parse()?,
            std: fields[3].parse()?,
            worst: fields[4].parse()?,
            opt_reached: if fields[5].is_empty() { None } else { Some(fields[5].parse()?) },
            runs: fields[6].parse()?,
            mean_seconds: fields[7].parse()?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{InstanceRow, RunDetail};

    fn fixture_report() -> BenchmarkReport {
        BenchmarkReport {
            runs_per_instance: 2,
            rows: vec![InstanceRow {
                name: "c9".into(),
                best: 3,
                avg: 3.5,
                std: 0.65,
                worst: 4,
                opt_reached: Some(1),
                runs: 2,
                mean_seconds: 0.012345,
                known_gamma: Some(3),
                run_details: vec![
                    RunDetail {
                        seed: 1,
                        best_size: 3,
                        generation_of_best: 2,
                        wall_time: 0.01,
                        history: vec![4, 3, 3],
                        dominators: vec![0, 3, 6],
                    },
                    RunDetail {
                        seed: 2,
                        best_size: 4,
                        generation_of_best: 0,
                        wall_time: 0.0147,
                        history: vec![4, 4, 4],
                        dominators: vec![0, 2, 5, 7],
                    },
                ],
            }],
            failures: vec![],
        }
    }

    #[test]
    fn empty_report_is_header_only() {
        let report = BenchmarkReport { runs_per_instance: 1, rows: vec![], failures: vec![] };
        assert_eq!(report_to_csv(&report), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn golden_csv_rendering() {
        let csv = report_to_csv(&fixture_report());
        assert_eq!(
            csv,
            "instance,best,avg,std,worst,opt_reached,runs,mean_seconds\n\
             c9,3,3.50,0.65,4,1,2,0.0123\n"
        );
    }

    #[test]
    fn row_round_trips_through_parse() {
        let csv = report_to_csv(&fixture_report());
        let rows = parse_report_csv(&csv).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].instance, "c9");
        assert_eq!(rows[0].best, 3);
        assert_eq!(rows[0].opt_reached, Some(1));
        assert!((rows[0].avg - 3.5).abs() < 1e-9);
    }

    #[test]
    fn timing_column_strips_cleanly() {
        let csv = report_to_csv(&fixture_report());
        let stripped = csv_without_timing(&csv);
        assert!(stripped.starts_with("instance,best,avg,std,worst,opt_reached,runs"));
        assert!(!stripped.contains("0.0123"));
    }

    #[test]
    fn json_mirror_contains_run_detail() {
        let value = report_to_json(&fixture_report());
        assert_eq!(value["rows"][0]["run_details"][0]["dominators"][1], 3);
        assert_eq!(value["rows"][0]["run_details"][0]["history"][0], 4);
        assert_eq!(value["runs_per_instance"], 2);
    }
}
