//! Report rendering for the `bounds` subcommand.

use polybound::BoundReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
    JsonLines,
}

pub fn csv_header() -> &'static str {
    "rule,k,residual,bound,holds,slack"
}

pub fn render(report: &BoundReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => {
            let mut line = format!("rule={}", report.rule);
            if let Some(k) = report.k {
                line.push_str(&format!(" k={k}"));
            }
            if let Some(bound) = report.bound {
                line.push_str(&format!(" bound={bound:.6e}"));
            }
            if let Some(residual) = report.residual {
                line.push_str(&format!(" residual={residual:.6e}"));
            }
            line.push_str(&format!(
                " slack={:.3e} holds={}",
                report.slack, report.holds
            ));
            line
        }
        ReportFormat::Csv => {
            let k = report.k.map(|k| k.to_string()).unwrap_or_default();
            let residual = report.residual.map(|v| format!("{v}")).unwrap_or_default();
            let bound = report.bound.map(|v| format!("{v}")).unwrap_or_default();
            format!(
                "{},{},{},{},{},{}",
                report.rule, k, residual, bound, report.holds, report.slack
            )
        }
        ReportFormat::JsonLines => {
            serde_json::to_string(report).expect("report serializes")
        }
    }
}
