use std::f64::consts::PI;
use std::io::{self, Write};

use serde::Serialize;

use crate::numfmt::fmt12;

/// Leading terms of the three counts at height `T`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MainTerms {
    /// `39T⁴/(8π⁴)`
    pub all: f64,
    /// `3T⁴/(8π⁴)`
    pub semistable: f64,
    /// `3T²/(2π²)`
    pub wr: f64,
}

impl MainTerms {
    pub const ALL_CONSTANT: f64 = 39.0 / (8.0 * PI * PI * PI * PI);
    pub const SEMISTABLE_CONSTANT: f64 = 3.0 / (8.0 * PI * PI * PI * PI);
    pub const WR_CONSTANT: f64 = 3.0 / (2.0 * PI * PI);
}

pub fn main_terms(t: u64) -> MainTerms {
    let t = t as f64;
    let t2 = t * t;
    MainTerms {
        all: MainTerms::ALL_CONSTANT * t2 * t2,
        semistable: MainTerms::SEMISTABLE_CONSTANT * t2 * t2,
        wr: MainTerms::WR_CONSTANT * t2,
    }
}

/// Exact counts at one height next to their main terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountReport {
    pub t: u64,
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    pub main1: f64,
    pub main2: f64,
    pub main3: f64,
    /// `|nᵢ/mainᵢ − 1|`
    pub rel_dev1: f64,
    pub rel_dev2: f64,
    pub rel_dev3: f64,
}

impl CountReport {
    pub fn new(t: u64, n1: u64, n2: u64, n3: u64) -> Self {
        let m = main_terms(t);
        let dev = |n: u64, main: f64| (n as f64 / main - 1.0).abs();
        Self {
            t,
            n1,
            n2,
            n3,
            main1: m.all,
            main2: m.semistable,
            main3: m.wr,
            rel_dev1: dev(n1, m.all),
            rel_dev2: dev(n2, m.semistable),
            rel_dev3: dev(n3, m.wr),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.t,
            self.n1,
            self.n2,
            self.n3,
            fmt12(self.main1),
            fmt12(self.main2),
            fmt12(self.main3),
            fmt12(self.rel_dev1),
            fmt12(self.rel_dev2),
            fmt12(self.rel_dev3)
        )
    }
}

pub const REPORT_CSV_HEADER: &str = "T,n1,n2,n3,main1,main2,main3,dev1,dev2,dev3";

pub fn write_report_csv<W: Write + ?Sized>(reports: &[CountReport], out: &mut W) -> io::Result<()> {
    writeln!(out, "{REPORT_CSV_HEADER}")?;
    for r in reports {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert_eq!(format!("{:.11}", MainTerms::ALL_CONSTANT), "0.05004666349");
        assert_eq!(format!("{:.11}", MainTerms::SEMISTABLE_CONSTANT), "0.00384974335");
        let m = main_terms(7);
        assert!((m.semistable / m.all - 1.0 / 13.0).abs() < 1e-15);
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_report_csv(&[CountReport::new(1, 1, 1, 1)], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), REPORT_CSV_HEADER);
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row.len(), 10);
        assert_eq!(&row[..4], &["1", "1", "1", "1"]);
        assert_eq!(row[4], "0.0500466634916");
    }
}
