//! The published value tables, recomputed from the sequences and compared
//! cell by cell against the printed numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::sequences::{a, a_k, a_s};
use crate::stats::palindromic_tilings;

/// Blank cell in the printed table.
const B: i64 = -1;

const T1: [[i64; 6]; 6] = [
    [1, 1, 2, 4, 8, 16],
    [1, 2, 5, 12, 28, 64],
    [1, 3, 9, 25, 66, 168],
    [1, 4, 14, 44, 129, 360],
    [1, 5, 20, 70, 225, 681],
    [1, 6, 27, 104, 363, 1182],
];

const T_AS2: [[i64; 5]; 9] = [
    [1, 3, 9, 25, 66],
    [1, 4, 13, 38, 104],
    [1, 5, 18, 56, 160],
    [1, 6, 24, 80, 240],
    [1, 7, 31, 111, 351],
    [1, 8, 39, 150, 501],
    [1, 9, 48, 198, 699],
    [1, 10, 58, 256, 955],
    [1, 11, 69, 325, 1280],
];

const T_DIAG: [[i64; 7]; 7] = [
    [1, 1, 2, 4, 8, 16, 32],
    [1, 3, 8, 20, 48, 112, B],
    [1, 5, 18, 56, 160, B, B],
    [1, 7, 32, 120, B, B, B],
    [1, 9, 50, B, B, B, B],
    [1, 10, B, B, B, B, B],
    [1, B, B, B, B, B, B],
];

const T_F3: [[i64; 9]; 9] = [
    [1, 1, 2, 4, 7, 13, 24, 44, 81],
    [1, 2, 5, 12, 26, 56, 118, 244, B],
    [1, 3, 9, 25, 63, 153, 359, B, B],
    [1, 4, 14, 44, 125, 336, B, B, B],
    [1, 5, 20, 70, 220, B, B, B, B],
    [1, 6, 27, 104, B, B, B, B, B],
    [1, 7, 35, B, B, B, B, B, B],
    [1, 8, B, B, B, B, B, B, B],
    [1, B, B, B, B, B, B, B, B],
];

const T_M: [[i64; 10]; 9] = [
    [1, 1, 2, 2, 4, 4, 8, 8, 16, 16],
    [1, 0, 1, 0, 2, 0, 4, 0, 8, 0],
    [1, 1, 3, 3, 8, 8, 20, 20, 48, 48],
    [1, 0, 2, 0, 5, 0, 12, 0, 28, 0],
    [1, 1, 4, 4, 13, 13, 38, 38, 104, 104],
    [1, 0, 3, 0, 9, 0, 25, 0, 66, 0],
    [1, 1, 5, 5, 19, 19, 63, 63, 192, 192],
    [1, 0, 4, 0, 14, 0, 44, 0, 129, 0],
    [1, 1, 6, 6, 26, 26, 96, 96, 321, 321],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableId {
    #[serde(rename = "T1")]
    T1,
    #[serde(rename = "T_as2")]
    As2,
    #[serde(rename = "T_diag")]
    Diag,
    #[serde(rename = "T_F3")]
    F3,
    #[serde(rename = "T_m")]
    M,
}

impl TableId {
    pub const ALL: [TableId; 5] = [Self::T1, Self::As2, Self::Diag, Self::F3, Self::M];

    pub fn name(self) -> &'static str {
        match self {
            Self::T1 => "T1",
            Self::As2 => "T_as2",
            Self::Diag => "T_diag",
            Self::F3 => "T_F3",
            Self::M => "T_m",
        }
    }

    fn title(self) -> &'static str {
        match self {
            Self::T1 => "a(r,n)",
            Self::As2 => "a_s(2,n)",
            Self::Diag => "a_r(r,n)",
            Self::F3 => "F(n,3,j) = a(j,n-1,3)",
            Self::M => "m(r,n)",
        }
    }

    fn labels(self) -> (&'static str, &'static str) {
        match self {
            Self::As2 => ("s", "n"),
            Self::F3 => ("j", "n"),
            _ => ("r", "n"),
        }
    }

    fn first_col(self) -> i64 {
        if self == Self::F3 {
            1
        } else {
            0
        }
    }

    fn published(self) -> Vec<Vec<i64>> {
        fn rows<const N: usize>(t: &[[i64; N]]) -> Vec<Vec<i64>> {
            t.iter().map(|r| r.to_vec()).collect()
        }
        match self {
            Self::T1 => rows(&T1),
            Self::As2 => rows(&T_AS2),
            Self::Diag => rows(&T_DIAG),
            Self::F3 => rows(&T_F3),
            Self::M => rows(&T_M),
        }
    }

    /// The value the sequences give at a cell.
    pub fn compute(self, row: i64, col: i64) -> BigInt {
        match self {
            Self::T1 => a(row, col),
            Self::As2 => a_s(row, 2, col),
            Self::Diag => a_s(row, row, col),
            Self::F3 => a_k(row, col - 1, 3),
            Self::M => palindromic_tilings(row, col),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown table '{s}' (expected T1, T_as2, T_diag, T_F3 or T_m)"))
    }
}

/// Counts go out as decimal strings so that no precision is lost.
fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: i64,
    pub col: i64,
    #[serde(serialize_with = "decimal")]
    pub value: BigInt,
    /// The printed value; absent for blank cells.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published: Option<i64>,
    /// Blank in print, filled in by computation.
    pub extrapolated: bool,
    /// Set on the highlighted cells of the diagonal table.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub bold: bool,
}

impl Cell {
    pub fn matches(&self) -> bool {
        self.published
            .map_or(true, |p| self.value == BigInt::from(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub id: TableId,
    pub title: &'static str,
    pub row_label: &'static str,
    pub col_label: &'static str,
    pub cols: Vec<i64>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.rows.iter().flatten()
    }

    /// Populated cells whose printed value differs from the computed one.
    pub fn mismatches(&self) -> Vec<&Cell> {
        self.cells().filter(|c| !c.matches()).collect()
    }

    pub fn populated(&self) -> usize {
        self.cells().filter(|c| c.published.is_some()).count()
    }
}

/// Recompute a table over the printed grid.
pub fn table(id: TableId) -> Table {
    let published = id.published();
    let first = id.first_col();
    let width = published[0].len() as i64;
    let rows = published
        .iter()
        .enumerate()
        .map(|(r, printed)| {
            let row = r as i64;
            printed
                .iter()
                .enumerate()
                .map(|(c, &p)| {
                    let col = first + c as i64;
                    Cell {
                        row,
                        col,
                        value: id.compute(row, col),
                        published: (p != B).then_some(p),
                        extrapolated: p == B,
                        bold: id == TableId::Diag && row + col == 3,
                    }
                })
                .collect()
        })
        .collect();
    let (row_label, col_label) = id.labels();
    Table {
        id,
        title: id.title(),
        row_label,
        col_label,
        cols: (first..first + width).collect(),
        rows,
    }
}
