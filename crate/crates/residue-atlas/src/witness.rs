use residue_atlas_core::strata::PoleKind;
use residue_atlas_core::surface::{build_one_zero_genus0, construct_c1_c2, principal_root, FlatSurface};
use residue_atlas_core::{Decision, Error, QComplex, Stratum, Verdict};

/// Flat surface realizing `r` in `s`, for the strata with a constructive
/// branch: genus zero with one zero, or genus zero with two zeros and only
/// poles of order −k.
pub fn witness(s: &Stratum, r: &[QComplex], decision: &Decision) -> Result<FlatSurface, Error> {
    match decision.verdict {
        Verdict::NotRealizable => return Err(Error::Precondition(format!("not realizable ({})", decision.tag))),
        Verdict::Undecided => return Err(Error::Unsupported(format!("undecided ({})", decision.tag))),
        Verdict::Realizable => {}
    }
    if s.genus != 0 {
        return Err(Error::Unsupported("no construction in positive genus".into()));
    }
    let zeros = s.zeros();
    if zeros.len() == 1 {
        return build_one_zero_genus0(s, r);
    }
    let only_minus_k = s.poles().iter().all(|p| p.kind == PoleKind::MinusK);
    if zeros.len() == 2 && s.k >= 2 && only_minus_k {
        let roots: Vec<_> = r.iter().map(|x| principal_root(x, s.k)).collect();
        return construct_c1_c2(s.k, zeros[0], zeros[1], &roots, None);
    }
    Err(Error::Unsupported(format!("no construction for {}", s)))
}
