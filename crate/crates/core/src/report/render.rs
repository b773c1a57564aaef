//! Tables and their CSV, Markdown and JSON renderings.

use std::fmt::Write as _;

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Markdown => "markdown",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
    Int(i64),
    Bool(bool),
    Empty,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub id: String,
    pub title: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(id: &str, title: &str, columns: &[&'static str]) -> Self {
        Self { id: id.to_string(), title: title.to_string(), columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width in table {}", self.id);
        self.rows.push(row);
    }
}

/// Tables plus verbatim text blocks (certificate transcripts).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub tables: Vec<Table>,
    pub blocks: Vec<(String, String)>,
}

/// Plain decimal with `digits` significant digits: no exponent, `.` as the
/// separator, trailing zeros kept. Non-finite values print as `nan`, `inf`
/// and `-inf`.
pub fn format_sig(v: f64, digits: usize) -> String {
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let digits = digits.max(1);
    if v == 0.0 {
        return if digits == 1 { "0".to_string() } else { format!("0.{}", "0".repeat(digits - 1)) };
    }
    // scientific formatting does the rounding, then the digits are placed
    let sci = format!("{:.*e}", digits - 1, v.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i64 = exp.parse().expect("integer exponent");
    let ds: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::new();
    if v < 0.0 {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-exp - 1) as usize));
        out.push_str(&ds);
    } else {
        let int_len = exp as usize + 1;
        if ds.len() <= int_len {
            out.push_str(&ds);
            out.push_str(&"0".repeat(int_len - ds.len()));
        } else {
            out.push_str(&ds[..int_len]);
            out.push('.');
            out.push_str(&ds[int_len..]);
        }
    }
    out
}

fn cell_text(c: &Cell, digits: usize) -> String {
    match c {
        Cell::Text(s) => s.clone(),
        Cell::Num(v) => format_sig(*v, digits),
        Cell::Int(i) => i.to_string(),
        Cell::Bool(b) => b.to_string(),
        Cell::Empty => String::new(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_cell(c: &Cell, digits: usize) -> String {
    match c {
        Cell::Text(s) => json_string(s),
        Cell::Num(v) if v.is_finite() => format_sig(*v, digits),
        Cell::Num(_) | Cell::Empty => "null".to_string(),
        Cell::Int(i) => i.to_string(),
        Cell::Bool(b) => b.to_string(),
    }
}

/// CSV: one block per table (header row first), blocks separated by an
/// empty line. Text blocks are not part of the CSV output.
fn render_csv(r: &Report, digits: usize) -> String {
    let mut out = String::new();
    for (i, t) in r.tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&t.columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
        for row in &t.rows {
            out.push_str(&row.iter().map(|c| csv_field(&cell_text(c, digits))).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
    }
    out
}

fn md_field(s: &str) -> String {
    s.replace('|', "\\|")
}

fn render_markdown(r: &Report, digits: usize) -> String {
    let mut out = String::new();
    for t in &r.tables {
        let _ = writeln!(out, "## {}\n", t.title);
        let _ = writeln!(out, "| {} |", t.columns.join(" | "));
        let _ = writeln!(out, "|{}|", vec!["---"; t.columns.len()].join("|"));
        for row in &t.rows {
            let cells: Vec<_> = row.iter().map(|c| md_field(&cell_text(c, digits))).collect();
            let _ = writeln!(out, "| {} |", cells.join(" | "));
        }
        out.push('\n');
    }
    for (title, body) in &r.blocks {
        let _ = writeln!(out, "### {title}\n\n```\n{}```\n", body);
    }
    out
}

fn render_json(r: &Report, digits: usize, command: &str, exit: u8) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"command\":{},\"exit\":{exit},\"tables\":[", json_string(command));
    for (i, t) in r.tables.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let cols: Vec<_> = t.columns.iter().map(|c| json_string(c)).collect();
        let _ = write!(
            out,
            "{{\"id\":{},\"title\":{},\"columns\":[{}],\"rows\":[",
            json_string(&t.id),
            json_string(&t.title),
            cols.join(",")
        );
        for (j, row) in t.rows.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let cells: Vec<_> = row.iter().map(|c| json_cell(c, digits)).collect();
            let _ = write!(out, "[{}]", cells.join(","));
        }
        out.push_str("]}");
    }
    out.push_str("],\"texts\":[");
    for (i, (title, body)) in r.blocks.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"title\":{},\"text\":{}}}", json_string(title), json_string(body));
    }
    out.push_str("]}\n");
    out
}

pub fn render(r: &Report, format: Format, digits: usize, command: &str, exit: u8) -> String {
    match format {
        Format::Csv => render_csv(r, digits),
        Format::Markdown => render_markdown(r, digits),
        Format::Json => render_json(r, digits, command, exit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(0.0026604429, 6), "0.00266044");
        assert_eq!(format_sig(1.8482350504, 6), "1.84824");
        assert_eq!(format_sig(-0.0053418418, 5), "-0.0053418");
        assert_eq!(format_sig(2.0, 6), "2.00000");
        assert_eq!(format_sig(9.9999996, 6), "10.0000");
        assert_eq!(format_sig(123456789.0, 3), "123000000");
        assert_eq!(format_sig(1e-20, 2), "0.000000000000000000010");
        assert_eq!(format_sig(0.0, 3), "0.00");
        assert_eq!(format_sig(f64::NAN, 3), "nan");
    }

    fn sample() -> Report {
        let mut t = Table::new("t", "A \"table\"", &["name", "value", "flag"]);
        t.push(vec!["a,b".into(), 0.5.into(), true.into()]);
        t.push(vec!["c|d".into(), Cell::Empty, false.into()]);
        Report { tables: vec![t], blocks: vec![("note".into(), "line\n".into())] }
    }

    #[test]
    fn csv_quotes_fields() {
        assert_eq!(render(&sample(), Format::Csv, 3, "x", 0), "name,value,flag\n\"a,b\",0.500,true\nc|d,,false\n");
    }

    #[test]
    fn markdown_escapes_pipes() {
        let md = render(&sample(), Format::Markdown, 3, "x", 0);
        assert!(md.contains("| c\\|d |  | false |"), "{md}");
        assert!(md.contains("```\nline\n```"));
    }

    #[test]
    fn json_shape() {
        let js = render(&sample(), Format::Json, 3, "x", 1);
        assert_eq!(
            js,
            "{\"command\":\"x\",\"exit\":1,\"tables\":[{\"id\":\"t\",\"title\":\"A \\\"table\\\"\",\"columns\":[\"name\",\"value\",\"flag\"],\"rows\":[[\"a,b\",0.500,true],[\"c|d\",null,false]]}],\"texts\":[{\"title\":\"note\",\"text\":\"line\\n\"}]}\n"
        );
    }
}
