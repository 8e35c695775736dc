use serde::Serialize;
use serde_json::{Map, Value};

/// One CSV/JSON field.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
    Missing,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Real)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<i32> for Cell {
    fn from(x: i32) -> Self {
        Cell::Int(i64::from(x))
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(i64::from(x))
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_owned())
    }
}

/// 17 significant digits.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.16e}")
    }
}

impl Cell {
    pub fn to_csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Real(x) => format_real(*x),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Real(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Missing => Value::Null,
        }
    }

    /// Reinterpret a CSV field the way this module writes it.
    pub fn parse(field: &str) -> Cell {
        if field.is_empty() {
            Cell::Missing
        } else if let Ok(i) = field.parse::<i64>() {
            Cell::Int(i)
        } else if let Ok(x) = field.parse::<f64>() {
            Cell::Real(x)
        } else {
            Cell::Text(field.to_owned())
        }
    }
}

/// Rows with a fixed column order plus run metadata.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub metadata: Map<String, Value>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| (*c).to_owned()).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn meta<T: Serialize>(&mut self, key: &str, value: T) {
        self.metadata
            .insert(key.to_owned(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        // writes into memory cannot fail
        w.write_record(&self.columns).expect("in-memory csv");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv)).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
    }

    pub fn to_json(&self, command: &str) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(Cell::to_json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("command".into(), command.into());
        doc.insert("columns".into(), self.columns.clone().into());
        doc.insert("metadata".into(), Value::Object(self.metadata.clone()));
        doc.insert("rows".into(), rows.into());
        let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
        out.push('\n');
        out
    }

    /// Parse CSV text produced by [`Table::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self, csv::Error> {
        let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let columns = r.headers()?.iter().map(str::to_owned).collect();
        let mut rows = Vec::new();
        for rec in r.records() {
            rows.push(rec?.iter().map(Cell::parse).collect());
        }
        Ok(Self {
            columns,
            rows,
            metadata: Map::new(),
        })
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Real values of a column (integers widened, blanks skipped).
    pub fn reals(&self, name: &str) -> Vec<f64> {
        let Some(i) = self.column(name) else { return Vec::new() };
        self.rows
            .iter()
            .filter_map(|row| match row[i] {
                Cell::Real(x) => Some(x),
                Cell::Int(k) => Some(k as f64),
                _ => None,
            })
            .collect()
    }
}
