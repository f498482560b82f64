//! Verifies that the star with `C(d,p)+1` leaves is a minimal forbidden
//! induced subgraph for the class of graphs with a representation: distinct
//! non-adjacent leaves need distinct p-subsets of the ground set, and only
//! `C(d,p)` of those exist. Deleting any vertex leaves a graph that fits.

use crate::error::{Error, Result};
use crate::graph::MAX_VERTICES;
use crate::named::NamedGraphSpec;
use crate::patterns::binomial;
use crate::solver::{decide_theta_leq, Decision, SearchConfig};

#[derive(Clone, Debug)]
pub struct StarMfisReport {
    pub d: usize,
    pub p: usize,
    /// Leaf count: C(d,p) + 1.
    pub k: usize,
    /// The star itself has no representation.
    pub star_excluded: bool,
    /// The star minus one leaf has one.
    pub leaf_deleted_included: bool,
    /// The leaves alone (star minus the center) have one.
    pub center_deleted_included: bool,
    pub is_mfis: bool,
}

pub fn verify_star_mfis(d: usize, p: usize, cfg: &SearchConfig) -> Result<StarMfisReport> {
    if d < 1 || p < 1 || p > d {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= p <= d, got d={d} p={p}"
        )));
    }
    let k_u64 = binomial(d, p) + 1;
    if k_u64 + 1 > MAX_VERTICES as u64 {
        return Err(Error::TooManyVertices {
            n: k_u64 as usize + 1,
            max: MAX_VERTICES,
        });
    }
    let k = k_u64 as usize;

    let star = NamedGraphSpec::Star(k).build()?;
    let smaller_star = NamedGraphSpec::Star(k - 1).build()?;
    let leaves_only = NamedGraphSpec::Edgeless(k).build()?;

    let run = |g, what: &str| -> Result<bool> {
        match decide_theta_leq(g, d, p, cfg)? {
            Decision::Yes(_) => Ok(true),
            Decision::No => Ok(false),
            Decision::Indeterminate { nodes } => Err(Error::Indeterminate(format!(
                "{what}: budget ran out after {nodes} nodes"
            ))),
        }
    };

    let star_excluded = !run(&star, "star decision")?;
    let leaf_deleted_included = run(&smaller_star, "leaf-deleted decision")?;
    let center_deleted_included = run(&leaves_only, "center-deleted decision")?;

    Ok(StarMfisReport {
        d,
        p,
        k,
        star_excluded,
        leaf_deleted_included,
        center_deleted_included,
        is_mfis: star_excluded && leaf_deleted_included && center_deleted_included,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn three_two_gives_k_four() {
        let report = verify_star_mfis(3, 2, &cfg()).unwrap();
        assert_eq!(report.k, 4);
        assert!(report.is_mfis, "{report:?}");
    }

    #[test]
    fn two_one_gives_k_three() {
        let report = verify_star_mfis(2, 1, &cfg()).unwrap();
        assert_eq!(report.k, 3);
        assert!(report.is_mfis);
    }

    #[test]
    fn one_one_gives_the_path_on_three_vertices() {
        // K_{1,2} = P_3 must fall outside dimension 1; K_2 and the edgeless
        // pair fit
        let report = verify_star_mfis(1, 1, &cfg()).unwrap();
        assert_eq!(report.k, 2);
        assert!(report.star_excluded);
        assert!(report.leaf_deleted_included);
        assert!(report.center_deleted_included);
        assert!(report.is_mfis);
    }

    #[test]
    fn bad_parameters() {
        assert!(verify_star_mfis(2, 3, &cfg()).is_err());
        assert!(verify_star_mfis(0, 1, &cfg()).is_err());
    }
}
