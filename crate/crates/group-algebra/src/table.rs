use serde::Serialize;

use crate::elem::GAElem;
use crate::structure::{idempotents, StructureFamily};
use crate::Result;

/// The five type A idempotent families in table order.
pub const TABLE_FAMILIES: [StructureFamily; 5] =
    [StructureFamily::Phi, StructureFamily::Rho, StructureFamily::RhoBar, StructureFamily::RhoL, StructureFamily::RhoR];

/// `row_i · col_j = δ_ij expected_i`, or no claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub row: StructureFamily,
    pub col: StructureFamily,
    pub expected: Option<StructureFamily>,
}

/// The multiplication table of type A idempotents, row by row.
pub fn table_one() -> Vec<TableCell> {
    use StructureFamily::*;
    let rows: [(StructureFamily, [Option<StructureFamily>; 5]); 5] = [
        (Phi, [Some(Phi), None, None, None, None]),
        (Rho, [Some(Rho); 5]),
        (RhoBar, [Some(RhoBar); 5]),
        (RhoL, [None, Some(Rho), Some(RhoBar), Some(RhoL), Some(RhoR)]),
        (RhoR, [None, Some(RhoBar), Some(Rho), Some(RhoR), Some(RhoL)]),
    ];
    rows.iter()
        .flat_map(|(row, cells)| {
            TABLE_FAMILIES.iter().zip(cells).map(move |(col, e)| TableCell { row: *row, col: *col, expected: *e })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CellResult {
    pub row: &'static str,
    pub col: &'static str,
    pub expected: Option<&'static str>,
    /// `None` for cells without a claim.
    pub holds: Option<bool>,
    /// First failing `(i, j)` power pair.
    pub failure: Option<(usize, usize)>,
}

/// Checks one cell at size `n` over all power pairs; idempotents are indexed
/// by the power of `x` they multiply.
pub fn check_cell(n: usize, cell: TableCell) -> Result<CellResult> {
    let mut out = CellResult {
        row: cell.row.tag(),
        col: cell.col.tag(),
        expected: cell.expected.map(StructureFamily::tag),
        holds: None,
        failure: None,
    };
    let Some(exp) = cell.expected else { return Ok(out) };
    let a = idempotents(n, cell.row)?;
    let b = idempotents(n, cell.col)?;
    let c = idempotents(n, exp)?;
    let zero = GAElem::zero(a[0].group());
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            let want = if i == j { c.get(i).unwrap_or(&zero) } else { &zero };
            if &(ai * bj) != want {
                out.holds = Some(false);
                out.failure = Some((i, j));
                return Ok(out);
            }
        }
    }
    out.holds = Some(true);
    Ok(out)
}

/// Raw products `row_i · col_j` for a cell, claimed or not.
pub fn cell_products(n: usize, row: StructureFamily, col: StructureFamily) -> Result<Vec<Vec<GAElem>>> {
    let a = idempotents(n, row)?;
    let b = idempotents(n, col)?;
    Ok(a.iter().map(|x| b.iter().map(|y| x * y).collect()).collect())
}
