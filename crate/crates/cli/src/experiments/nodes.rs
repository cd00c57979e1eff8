use chebsig_core::cheb::{cheb_points_first_kind, cheb_points_second_kind};
use chebsig_core::io::Table;
use chebsig_core::nodes_analysis::{compare_nodes, legendre_points, mean_distance, midpoint_value, smallest_nonzero_midpoint};
use chebsig_core::{Domain, Error, NodeSet};

use super::index_column;
use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

pub const PROFILE_SIZES: [usize; 3] = [5, 10, 20];

pub fn run_nodes(n: usize) -> HarnessResult<ExperimentReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("node count must be >= 2 (got {n})")).into());
    }
    let families = |count: usize| -> HarnessResult<[NodeSet; 4]> {
        Ok([
            cheb_points_first_kind(count, Domain::UNIT)?,
            cheb_points_second_kind(count - 1, Domain::UNIT)?,
            legendre_points(count)?,
            NodeSet::uniform(count, Domain::UNIT)?,
        ])
    };
    let [first, second, legendre, uniform] = families(n)?;

    let mut r = ExperimentReport::new("nodes");
    r.meta("count", n);
    r.series(
        "node_tables",
        Table::from_pairs(vec![
            ("index", index_column(n)),
            ("cheb_first", first.points().to_vec()),
            ("cheb_second", second.points().to_vec()),
            ("legendre", legendre.points().to_vec()),
            ("uniform", uniform.points().to_vec()),
        ])?,
        Scale::Linear,
    )?;
    r.scalar("compare_first_kind_legendre", compare_nodes(&first, &legendre)?)?;
    r.scalar("compare_second_kind_legendre", compare_nodes(&second, &legendre)?)?;

    for size in PROFILE_SIZES {
        let [_, c, l, u] = families(size)?;
        let (pc, pl, pu) = (mean_distance(c.points())?, mean_distance(l.points())?, mean_distance(u.points())?);
        r.scalar(&format!("flatness_chebyshev_{size}"), pc.flatness())?;
        r.scalar(&format!("flatness_legendre_{size}"), pl.flatness())?;
        r.scalar(&format!("flatness_uniform_{size}"), pu.flatness())?;
        r.series(
            &format!("mean_distance_{size}"),
            Table::from_pairs(vec![
                ("x_chebyshev", pc.points),
                ("gm_chebyshev", pc.gm_distance),
                ("x_legendre", pl.points),
                ("gm_legendre", pl.gm_distance),
                ("x_uniform", pu.points),
                ("gm_uniform", pu.gm_distance),
            ])?,
            Scale::Linear,
        )?;
    }

    let m = smallest_nonzero_midpoint()?;
    r.scalar("smallest_nonzero_midpoint", m as f64)?;
    r.scalar("midpoint_value", midpoint_value(m))?;
    Ok(r)
}
