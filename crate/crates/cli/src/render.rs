//! Bit-exact text renderings: aligned tables, JSON rows of decimal
//! strings, and CSV. No floats anywhere.

use clap::ValueEnum;
use riordan_core::{Rational, Triangle};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn render_triangle(t: &Triangle, format: Format) -> String {
    match format {
        Format::Table => {
            let width = t
                .rows()
                .iter()
                .flatten()
                .map(|c| c.to_string().len())
                .max()
                .unwrap_or(1);
            t.rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| format!("{:>width$}", c.to_string()))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = t
                .rows()
                .iter()
                .map(|row| row.iter().map(Rational::to_string).collect())
                .collect();
            serde_json::to_string(&rows).expect("strings always serialize")
        }
        Format::Csv => t
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(Rational::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn render_sequence(terms: &[Rational], format: Format) -> String {
    let strings: Vec<String> = terms.iter().map(Rational::to_string).collect();
    match format {
        Format::Table => strings.join(" "),
        Format::Json => serde_json::to_string(&strings).expect("strings always serialize"),
        Format::Csv => strings.join(","),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let id = Triangle::identity(3);
        assert_eq!(render_triangle(&id, Format::Csv), "1\n0,1\n0,0,1");
        assert_eq!(
            render_triangle(&id, Format::Json),
            r#"[["1"],["0","1"],["0","0","1"]]"#
        );
        let table = render_triangle(&id, Format::Table);
        assert_eq!(table.lines().count(), 3);
        assert_eq!(
            render_sequence(&[Rational::new(1, 2), Rational::from(-3)], Format::Csv),
            "1/2,-3"
        );
    }
}
