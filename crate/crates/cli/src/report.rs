//! Output plumbing shared by every subcommand: a plain table type with
//! pretty/CSV renderers, the format flag, and the failure-to-exit-code map.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

/// Command failures carrying their process exit code: mathematical
/// failures exit 1, usage and environment problems exit 2.
#[derive(Debug)]
pub enum Failure {
    Math(String),
    Usage(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Math(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Math(m) | Failure::Usage(m) => m,
        }
    }
}

/// Core errors split into usage-shaped and math-shaped failures.
pub fn core_failure(e: sfock_core::Error) -> Failure {
    use sfock_core::Error::*;
    match e {
        Parse(_) | InvalidPair(_) | StratumOutOfRange { .. } | InvalidCoordinate { .. }
        | BadRestriction { .. } | DeltaTooLong { .. } | IndexOutOfBounds { .. } => {
            Failure::Usage(e.to_string())
        }
        _ => Failure::Math(e.to_string()),
    }
}

pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render_pretty(&self) -> String {
        let ncols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (c, cell) in row.iter().enumerate() {
                widths[c] = widths[c].max(cell.len());
            }
        }
        let mut out = String::new();
        let line = |cells: &[String], out: &mut String| {
            for (c, cell) in cells.iter().enumerate() {
                if c > 0 {
                    out.push_str("  ");
                }
                out.push_str(cell);
                if c + 1 < ncols {
                    out.push_str(&" ".repeat(widths[c] - cell.len()));
                }
            }
            out.push('\n');
        };
        line(&self.headers, &mut out);
        for row in &self.rows {
            line(row, &mut out);
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let quote = |cell: &str| -> String {
            if cell.contains(',') || cell.contains('"') {
                format!("\"{}\"", cell.replace('"', "\"\""))
            } else {
                cell.to_string()
            }
        };
        let mut out = String::new();
        out.push_str(
            &self
                .headers
                .iter()
                .map(|h| quote(h))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["l=2,s=1".into(), "5".into()]);
        assert_eq!(t.render_csv(), "a,b\n\"l=2,s=1\",5\n");
    }

    #[test]
    fn pretty_aligns_columns() {
        let mut t = Table::new(&["x", "verdict"]);
        t.push(vec!["10".into(), "PASS".into()]);
        let text = t.render_pretty();
        assert!(text.contains("x   verdict"));
        assert!(text.contains("10  PASS"));
    }
}
