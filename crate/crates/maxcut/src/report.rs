//! Run reports and their CSV / Markdown / JSON renderings.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A cut or total weight in either arithmetic mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightValue {
    Int(i64),
    Real(f64),
}

impl From<i64> for WeightValue {
    fn from(v: i64) -> Self {
        WeightValue::Int(v)
    }
}

impl From<f64> for WeightValue {
    fn from(v: f64) -> Self {
        WeightValue::Real(v)
    }
}

impl WeightValue {
    pub fn as_f64(self) -> f64 {
        match self {
            WeightValue::Int(v) => v as f64,
            WeightValue::Real(v) => v,
        }
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightValue::Int(v) => write!(f, "{v}"),
            WeightValue::Real(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for WeightValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            WeightValue::Int(v) => serializer.serialize_i64(*v),
            WeightValue::Real(v) => serializer.serialize_f64(*v),
        }
    }
}

/// One row of solver output: everything a benchmark table needs.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub instance: String,
    pub n: usize,
    pub algorithm: String,
    pub cut_weight: WeightValue,
    pub total_weight: WeightValue,
    /// Full-precision `cut_weight / total_weight` (0 when the total is 0).
    /// All renderings print it rounded to three decimals.
    pub ratio: f64,
    pub optimal_weight: Option<WeightValue>,
    pub time_ms: f64,
    pub policy: String,
}

impl RunReport {
    pub const CSV_HEADER: &'static str =
        "instance,n,algorithm,cut_weight,total_weight,ratio,optimal_weight,time_ms,policy";

    pub fn ratio_of(cut: WeightValue, total: WeightValue) -> f64 {
        let t = total.as_f64();
        if t == 0.0 {
            0.0
        } else {
            cut.as_f64() / t
        }
    }

    fn rounded_ratio(&self) -> f64 {
        (self.ratio * 1000.0).round() / 1000.0
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},{},{:.3},{}",
            self.instance,
            self.n,
            self.algorithm,
            self.cut_weight,
            self.total_weight,
            self.ratio,
            self.optimal_weight.map(|w| w.to_string()).unwrap_or_default(),
            self.time_ms,
            self.policy,
        )
    }

    pub fn markdown_header() -> String {
        let mut s = String::new();
        s.push_str("| instance | n | algorithm | cut_weight | total_weight | ratio | optimal_weight | time_ms | policy |\n");
        s.push_str("|---|---|---|---|---|---|---|---|---|");
        s
    }

    pub fn markdown_row(&self) -> String {
        format!(
            "| {} | {} | {} | {} | {} | {:.3} | {} | {:.3} | {} |",
            self.instance,
            self.n,
            self.algorithm,
            self.cut_weight,
            self.total_weight,
            self.ratio,
            self.optimal_weight.map(|w| w.to_string()).unwrap_or_default(),
            self.time_ms,
            self.policy,
        )
    }
}

impl Serialize for RunReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RunReport", 9)?;
        s.serialize_field("instance", &self.instance)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("algorithm", &self.algorithm)?;
        s.serialize_field("cut_weight", &self.cut_weight)?;
        s.serialize_field("total_weight", &self.total_weight)?;
        s.serialize_field("ratio", &self.rounded_ratio())?;
        s.serialize_field("optimal_weight", &self.optimal_weight)?;
        s.serialize_field("time_ms", &self.time_ms)?;
        s.serialize_field("policy", &self.policy)?;
        s.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
    Json,
}

/// Render a batch of reports in the requested format.
pub fn render(reports: &[RunReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => {
            let mut out = String::from(RunReport::CSV_HEADER);
            for r in reports {
                out.push('\n');
                out.push_str(&r.csv_row());
            }
            out.push('\n');
            out
        }
        ReportFormat::Markdown => {
            let mut out = RunReport::markdown_header();
            for r in reports {
                out.push('\n');
                out.push_str(&r.markdown_row());
            }
            out.push('\n');
            out
        }
        ReportFormat::Json => {
            let mut out =
                serde_json::to_string_pretty(reports).expect("reports serialize infallibly");
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        RunReport {
            instance: "tri".to_string(),
            n: 3,
            algorithm: "stabilizer".to_string(),
            cut_weight: WeightValue::Int(5),
            total_weight: WeightValue::Int(6),
            ratio: 5.0 / 6.0,
            optimal_weight: None,
            time_ms: 0.25,
            policy: "tie=lex survivor=small engine=sorted".to_string(),
        }
    }

    #[test]
    fn csv_schema_is_stable() {
        let r = sample();
        assert_eq!(
            RunReport::CSV_HEADER,
            "instance,n,algorithm,cut_weight,total_weight,ratio,optimal_weight,time_ms,policy"
        );
        assert_eq!(r.csv_row(), "tri,3,stabilizer,5,6,0.833,,0.250,tie=lex survivor=small engine=sorted");
    }

    #[test]
    fn renderings_share_numeric_values() {
        let r = sample();
        let json: serde_json::Value =
            serde_json::from_str(&render(std::slice::from_ref(&r), ReportFormat::Json)).unwrap();
        assert_eq!(json[0]["cut_weight"], serde_json::json!(5));
        assert_eq!(json[0]["ratio"], serde_json::json!(0.833));
        let md = render(std::slice::from_ref(&r), ReportFormat::Markdown);
        assert!(md.contains("| 0.833 |"));
        let csv = render(&[r], ReportFormat::Csv);
        assert!(csv.contains(",0.833,"));
    }

    #[test]
    fn zero_total_yields_zero_ratio() {
        assert_eq!(RunReport::ratio_of(WeightValue::Int(0), WeightValue::Int(0)), 0.0);
    }
}
