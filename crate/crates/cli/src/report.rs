//! Report rows and their CSV/JSON renderings.
//!
//! Both formats carry the same numeric values: integers as exact decimal
//! digits, floats in shortest round-trip form. Re-running a command with the
//! same flags is bit-identical; run metadata lives in the JSON `meta` object
//! and never includes timestamps.

use eiscensus_core::{CensusTally, DensityConstants};
use serde::Serialize;

/// One census row with empirical densities and the closed-form columns.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub d: u32,
    #[serde(rename = "H")]
    pub h: u64,
    pub total: u128,
    #[serde(rename = "count_E")]
    pub count_e: u128,
    #[serde(rename = "count_E1_prose")]
    pub count_e1_prose: u128,
    #[serde(rename = "count_E2_prose")]
    pub count_e2_prose: u128,
    #[serde(rename = "count_A")]
    pub count_a: u128,
    #[serde(rename = "count_B")]
    pub count_b: u128,
    pub count_star: u128,
    #[serde(rename = "empirical_E_density")]
    pub empirical_e_density: f64,
    pub empirical_star_density: f64,
    /// `count_star / count_E`; null when nothing is Eisenstein.
    pub ratio_empirical: Option<f64>,
    pub theta: f64,
    pub theta_star: f64,
    pub ratio_theoretical: f64,
    /// `(count_A + count_B) / (2H)^d`, the density of the Moebius-sum
    /// failure sets, for side-by-side comparison with `alpha + beta`.
    pub alt_complement_density: f64,
}

impl ReportRow {
    pub fn new(tally: &CensusTally, constants: &DensityConstants) -> Self {
        let volume = (2.0 * tally.height as f64).powi(tally.degree as i32);
        let ratio_empirical = if tally.count_e > 0 {
            Some(tally.count_star as f64 / tally.count_e as f64)
        } else {
            None
        };
        Self {
            d: tally.degree,
            h: tally.height,
            total: tally.total,
            count_e: tally.count_e,
            count_e1_prose: tally.count_e1_prose,
            count_e2_prose: tally.count_e2_prose,
            count_a: tally.count_a,
            count_b: tally.count_b,
            count_star: tally.count_star,
            empirical_e_density: tally.count_e as f64 / volume,
            empirical_star_density: tally.count_star as f64 / volume,
            ratio_empirical,
            theta: constants.theta,
            theta_star: constants.theta_star,
            ratio_theoretical: constants.ratio,
            alt_complement_density: (tally.count_a + tally.count_b) as f64 / volume,
        }
    }

    /// `(count_E - count_A - count_B) / count_E`: the complement ratio under
    /// the Moebius-sum accounting of the failure sets.
    pub fn ratio_alternative(&self) -> Option<f64> {
        if self.count_e > 0 {
            Some((self.count_e - self.count_a - self.count_b) as f64 / self.count_e as f64)
        } else {
            None
        }
    }
}

pub const REPORT_HEADER: &str = "d,H,total,count_E,count_E1_prose,count_E2_prose,count_A,count_B,count_star,empirical_E_density,empirical_star_density,ratio_empirical,theta,theta_star,ratio_theoretical,alt_complement_density";

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn report_csv_line(r: &ReportRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.d,
        r.h,
        r.total,
        r.count_e,
        r.count_e1_prose,
        r.count_e2_prose,
        r.count_a,
        r.count_b,
        r.count_star,
        r.empirical_e_density,
        r.empirical_star_density,
        fmt_opt(r.ratio_empirical),
        r.theta,
        r.theta_star,
        r.ratio_theoretical,
        r.alt_complement_density,
    )
}

/// One row of the `constants` command.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantsRow {
    pub d: u32,
    pub prime_bound: u64,
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub theta_star: f64,
    pub ratio: f64,
    pub tail_bound: f64,
}

impl From<&DensityConstants> for ConstantsRow {
    fn from(c: &DensityConstants) -> Self {
        Self {
            d: c.degree,
            prime_bound: c.prime_bound,
            theta: c.theta,
            alpha: c.alpha,
            beta: c.beta,
            theta_star: c.theta_star,
            ratio: c.ratio,
            tail_bound: c.tail_bound,
        }
    }
}

pub const CONSTANTS_HEADER: &str = "d,prime_bound,theta,alpha,beta,theta_star,ratio,tail_bound";

pub fn constants_csv_line(r: &ConstantsRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.d, r.prime_bound, r.theta, r.alpha, r.beta, r.theta_star, r.ratio, r.tail_bound
    )
}

/// One row of the `table` command.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub d: u32,
    pub theta: f64,
    pub theta_star: f64,
    pub ratio: f64,
}

pub const TABLE_HEADER: &str = "d,theta,theta_star,ratio";

pub fn table_csv_line(r: &TableRow) -> String {
    format!("{},{},{},{}", r.d, r.theta, r.theta_star, r.ratio)
}

/// Assembles the full payload for one command run.
pub fn render<R: Serialize>(
    format: crate::Format,
    meta: serde_json::Value,
    header: &str,
    rows: &[R],
    csv_line: impl Fn(&R) -> String,
) -> String {
    match format {
        crate::Format::Csv => {
            let mut out = String::from(header);
            out.push('\n');
            for r in rows {
                out.push_str(&csv_line(r));
                out.push('\n');
            }
            out
        }
        crate::Format::Json => {
            let doc = serde_json::json!({ "meta": meta, "rows": rows });
            let mut out =
                serde_json::to_string_pretty(&doc).expect("report serialization cannot fail");
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eiscensus_core::MonicPoly;

    fn sample_row() -> ReportRow {
        ReportRow {
            d: 3,
            h: 2,
            total: 125,
            count_e: 18,
            count_e1_prose: 0,
            count_e2_prose: 0,
            count_a: 0,
            count_b: 0,
            count_star: 18,
            empirical_e_density: 0.28125,
            empirical_star_density: 0.28125,
            ratio_empirical: Some(1.0),
            theta: 0.0953,
            theta_star: 0.0923,
            ratio_theoretical: 0.9681,
            alt_complement_density: 0.0,
        }
    }

    #[test]
    fn csv_column_order_is_pinned() {
        let line = report_csv_line(&sample_row());
        assert_eq!(
            line,
            "3,2,125,18,0,0,0,0,18,0.28125,0.28125,1,0.0953,0.0923,0.9681,0"
        );
        assert_eq!(REPORT_HEADER.split(',').count(), line.split(',').count());
    }

    #[test]
    fn null_ratio_renders_empty_in_csv_and_null_in_json() {
        let mut row = sample_row();
        row.count_e = 0;
        row.ratio_empirical = None;
        let line = report_csv_line(&row);
        assert!(line.contains(",,"), "empty CSV field for null ratio: {line}");
        let json = serde_json::to_value(&row).unwrap();
        assert!(json["ratio_empirical"].is_null());
    }

    #[test]
    fn json_field_names_match_report_row() {
        let json = serde_json::to_value(sample_row()).unwrap();
        for key in REPORT_HEADER.split(',') {
            assert!(json.get(key).is_some(), "missing field {key}");
        }
    }

    /// The polynomial renderings whose exact formats this crate owns.
    #[test]
    fn polynomial_render_formats() {
        let f = MonicPoly::new(3, vec![2, 2, 2]).unwrap();
        assert_eq!(f.to_string(), "x^3 + 2x^2 + 2x + 2");
        assert_eq!(f.coeff_list(), "[2, 2, 2]");
    }
}
