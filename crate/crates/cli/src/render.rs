//! Text, JSON and CSV renderings shared by the subcommands.

use std::io::Write;

use fcgf_core::series::{QLaurent, Rational};
use num_traits::Zero;
use serde_json::{json, Value};

/// Coefficients of `q^lo ..= q^hi` of one x-coefficient.
pub struct CoeffList {
    pub x_degree: usize,
    pub lo: i64,
    pub values: Vec<Rational>,
    pub precision: String,
}

impl CoeffList {
    /// From the lowest stored exponent (at most 0) to the last nonzero
    /// exponent known and at most `q_max`.
    pub fn new(x_degree: usize, c: &QLaurent, q_max: i64) -> Self {
        let lo = c.valuation().unwrap_or(0).min(0);
        let top = match c.precision().bound() {
            Some(p) => q_max.min(p - 1),
            None => q_max,
        };
        let (lo, values) = match (lo..=top).rev().find(|&e| !c.coeff(e).is_zero()) {
            Some(hi) => (lo, (lo..=hi).map(|e| c.coeff(e)).collect()),
            None => (0, Vec::new()),
        };
        Self { x_degree, lo, values, precision: c.precision().to_string() }
    }

    /// `[a0, a1, ...]`, prefixed by `q^lo ` when the list starts below `q^0`.
    pub fn text(&self) -> String {
        let items: Vec<String> = if self.values.is_empty() {
            vec!["0".into()]
        } else {
            self.values.iter().map(|v| v.to_string()).collect()
        };
        let list = format!("[{}]", items.join(", "));
        if self.lo == 0 {
            list
        } else {
            format!("q^{} {list}", self.lo)
        }
    }

    pub fn json(&self) -> Value {
        json!({
            "x_degree": self.x_degree,
            "q_start": self.lo,
            "coefficients": self.values.iter().map(rational_json).collect::<Vec<_>>(),
            "precision": self.precision,
        })
    }

    pub fn csv_rows(&self) -> impl Iterator<Item = [String; 3]> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| [self.x_degree.to_string(), (self.lo + k as i64).to_string(), v.to_string()])
    }
}

/// Exact rational as a `p/q` string.
pub fn rational_json(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable output"));
}

/// Writes `rows` under `header` as CSV to standard output.
pub fn print_csv<R, I>(header: &[&str], rows: R)
where
    R: IntoIterator<Item = I>,
    I: IntoIterator,
    I::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(header).expect("stdout");
    for row in rows {
        w.write_record(row).expect("stdout");
    }
    w.flush().expect("stdout");
}

/// Rows padded into columns.
pub fn print_columns(rows: &[Vec<String>]) {
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..width).map(|i| rows.iter().filter_map(|r| r.get(i)).map(|c| c.chars().count()).max().unwrap_or(0)).collect();
    let mut out = std::io::stdout().lock();
    for r in rows {
        let mut line = String::new();
        for (i, cell) in r.iter().enumerate() {
            if i + 1 == r.len() {
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(widths[i] - cell.chars().count() + 2));
            }
        }
        writeln!(out, "{}", line.trim_end()).expect("stdout");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_stop_at_the_last_nonzero_coefficient() {
        let c = QLaurent::from_ints(0, &[1, 3, 5, 4, 1, 0, 0]);
        assert_eq!(CoeffList::new(3, &c, 10).text(), "[1, 3, 5, 4, 1]");
        let c = QLaurent::from_ints(-2, &[1, 0, -2]);
        assert_eq!(CoeffList::new(1, &c, 10).text(), "q^-2 [1, 0, -2]");
        assert_eq!(CoeffList::new(0, &QLaurent::zero(), 10).text(), "[0]");
    }

    #[test]
    fn json_and_text_carry_the_same_numbers() {
        let c = QLaurent::from_ints(0, &[1, -2]);
        let l = CoeffList::new(2, &c, 5);
        assert_eq!(l.json()["coefficients"], json!(["1/1", "-2/1"]));
        let rows: Vec<_> = l.csv_rows().collect();
        assert_eq!(rows[1], ["2".to_string(), "1".into(), "-2".into()]);
    }
}
