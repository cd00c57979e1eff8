use chebsig_core::conditioning::{build_basis_matrix, conditioning_sweep, singular_values, Basis, DEFAULT_GRID};
use chebsig_core::io::Table;
use chebsig_core::Domain;

use super::index_column;
use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

pub const MAX_DEGREE: usize = 10;

pub fn run_condition() -> HarnessResult<ExperimentReport> {
    run_condition_on_grid(DEFAULT_GRID)
}

pub fn run_condition_on_grid(grid: usize) -> HarnessResult<ExperimentReport> {
    let unit = Domain::UNIT;
    let right = Domain::new(0.0, 1.0)?;
    let cheb = conditioning_sweep(Basis::Chebyshev, unit, MAX_DEGREE, grid)?;
    let mono = conditioning_sweep(Basis::Monomial, unit, MAX_DEGREE, grid)?;
    let mono01 = conditioning_sweep(Basis::Monomial, right, MAX_DEGREE, grid)?;
    let sv = singular_values(&build_basis_matrix(Basis::Chebyshev, unit, MAX_DEGREE, grid)?);

    let mut r = ExperimentReport::new("condition");
    r.meta("grid_size", grid);
    r.meta("max_degree", MAX_DEGREE);
    r.scalar("cond_chebyshev", cheb[MAX_DEGREE])?;
    r.scalar("cond_monomial", mono[MAX_DEGREE])?;
    r.scalar("cond_monomial_0_1", mono01[MAX_DEGREE])?;
    r.scalar("sigma_max_chebyshev", sv[0])?;
    r.scalar("sigma_min_chebyshev", sv[sv.len() - 1])?;
    r.series(
        "sweep",
        Table::from_pairs(vec![
            ("degree", index_column(MAX_DEGREE + 1)),
            ("chebyshev", cheb),
            ("monomial", mono),
            ("monomial_0_1", mono01),
        ])?,
        Scale::Log,
    )?;
    Ok(r)
}
