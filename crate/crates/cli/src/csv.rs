//! Versioned CSV emission with pinned float formatting, so the same
//! configuration always produces byte-identical output files.

/// First line of every CSV file this crate writes.
pub const CSV_VERSION_LINE: &str = "# graphdiff-csv v1";

/// Formats a float with 17 significant digits (scientific notation), the
/// precision pinned by the output contract. NaN — used for degenerate cells
/// such as zero-denominator ratios — prints as `nan`.
pub fn fmt_float(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else {
        format!("{:.16e}", v)
    }
}

/// Builder for the CSV format: version comment, header row, data rows, and
/// trailing `# summary:` comment lines carrying run-level statistics.
pub struct Csv {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
    summaries: Vec<String>,
}

impl Csv {
    pub fn new(columns: &[&str]) -> Self {
        Csv {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            summaries: Vec::new(),
        }
    }

    /// Appends one data row; the cell count must match the header.
    pub fn push_row(&mut self, cells: Vec<String>) {
        assert_eq!(
            cells.len(),
            self.columns.len(),
            "row width must match the header"
        );
        self.rows.push(cells);
    }

    /// Appends one `# summary:` comment line emitted after the data rows.
    pub fn push_summary(&mut self, line: impl Into<String>) {
        self.summaries.push(line.into());
    }

    /// Renders the complete file contents.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_VERSION_LINE);
        out.push('\n');
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        for s in &self.summaries {
            out.push_str("# summary: ");
            out.push_str(s);
            out.push('\n');
        }
        out
    }
}
