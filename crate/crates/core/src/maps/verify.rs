use serde::Serialize;

use super::{Direction, Injectivity, MapHandle};
use crate::error::{Error, Result};
use crate::rational::Frac;
use crate::sequence::{generate_capped, FareySeq, DEFAULT_ORDER_CAP};

/// The result of applying a map to a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mapping {
    /// The images in increasing order.
    pub image: FareySeq,
    /// (x, matrix·x) in the order of the input sequence.
    pub pairs: Vec<(Frac, Frac)>,
}

/// Applies `handle.matrix` termwise to `seq`.
pub fn apply_map(handle: &MapHandle, seq: &FareySeq) -> Result<Mapping> {
    let pairs = seq
        .iter()
        .map(|&x| handle.matrix.apply(x).map(|y| (x, y)))
        .collect::<Result<Vec<_>>>()?;
    let mut terms: Vec<Frac> = pairs.iter().map(|&(_, y)| y).collect();
    if !handle.matrix.preserves_order() {
        terms.reverse();
    }
    let image = FareySeq::from_terms(seq.spec().clone().image(handle.matrix), terms)?;
    Ok(Mapping { image, pairs })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub label: String,
    pub direction: Direction,
    pub injectivity: Injectivity,
    pub domain_len: usize,
    pub codomain_len: usize,
    /// Every codomain term is hit.
    pub surjective: bool,
    pub involutory: bool,
    /// Domain terms the matrix fixes.
    pub fixed_points: Vec<Frac>,
    pub endpoints_checked: usize,
    pub passed: bool,
    /// The first counterexample when `passed` is false.
    pub failure: Option<String>,
}

impl VerificationReport {
    pub fn into_result(self) -> Result<Self> {
        match self.failure {
            Some(detail) => Err(Error::VerificationFailure {
                map: self.label,
                detail,
            }),
            None => Ok(self),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize infallibly")
    }
}

/// Generates domain and codomain and checks that the map sends every domain
/// term into the codomain, strictly monotonically in the declared direction,
/// onto the codomain when declared bijective, and reproduces its documented
/// endpoint images and fixed point.
pub fn verify_map(handle: &MapHandle) -> Result<VerificationReport> {
    verify_map_capped(handle, DEFAULT_ORDER_CAP)
}

pub fn verify_map_capped(handle: &MapHandle, cap: i64) -> Result<VerificationReport> {
    let domain = generate_capped(&handle.domain, cap)?;
    let codomain = generate_capped(&handle.codomain, cap)?;
    let matrix = handle.matrix;

    let mut report = VerificationReport {
        label: handle.label.clone(),
        direction: handle.direction,
        injectivity: handle.injectivity,
        domain_len: domain.len(),
        codomain_len: codomain.len(),
        surjective: false,
        involutory: matrix.is_involution(),
        fixed_points: Vec::new(),
        endpoints_checked: 0,
        passed: false,
        failure: None,
    };
    if let Err(detail) = check(handle, &domain, &codomain, &mut report) {
        report.failure = Some(detail);
    } else {
        report.passed = true;
    }
    Ok(report)
}

fn check(
    handle: &MapHandle,
    domain: &FareySeq,
    codomain: &FareySeq,
    report: &mut VerificationReport,
) -> std::result::Result<(), String> {
    let matrix = handle.matrix;
    let mut prev: Option<(Frac, usize)> = None;
    for &x in domain {
        let y = matrix.apply(x).map_err(|e| e.to_string())?;
        if y == x {
            report.fixed_points.push(x);
        }
        let pos = codomain
            .position(y)
            .ok_or_else(|| format!("{x} ↦ {y}, which is not in {}", handle.codomain))?;
        if let Some((px, ppos)) = prev {
            let ok = match handle.direction {
                Direction::Preserving => pos > ppos,
                Direction::Reversing => pos < ppos,
            };
            if !ok {
                let py = codomain.terms()[ppos];
                return Err(format!(
                    "{px} < {x} but {px} ↦ {py} and {x} ↦ {y} is not {}",
                    handle.direction
                ));
            }
        }
        prev = Some((x, pos));
    }

    // Strict monotonicity already makes the map injective.
    report.surjective = domain.len() == codomain.len();
    if handle.injectivity == Injectivity::Bijective && !report.surjective {
        let missed = codomain
            .iter()
            .find(|y| {
                matrix
                    .inverse()
                    .and_then(|inv| inv.apply(**y))
                    .map_or(true, |x| !domain.contains(x))
            })
            .map_or_else(String::new, |y| format!(", e.g. {y}"));
        return Err(format!(
            "{} domain terms cannot cover {} codomain terms{missed}",
            domain.len(),
            codomain.len()
        ));
    }

    for &(x, y) in &handle.endpoints {
        match matrix.apply(x) {
            Ok(got) if got == y => {}
            Ok(got) => return Err(format!("documented {x} ↦ {y}, got {got}")),
            Err(e) => return Err(format!("documented {x} ↦ {y}: {e}")),
        }
        if domain.contains(x) && !codomain.contains(y) {
            return Err(format!(
                "documented image {y} of {x} is not in {}",
                handle.codomain
            ));
        }
        report.endpoints_checked += 1;
    }

    if let Some(fp) = handle.fixed_point {
        if !domain.contains(fp) {
            return Err(format!(
                "declared fixed point {fp} is not in {}",
                handle.domain
            ));
        }
        if !report.fixed_points.contains(&fp) {
            return Err(format!("declared fixed point {fp} is moved"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NeighborReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
}

/// Checks that consecutive terms h/k < h'/k' satisfy h'k − hk' = 1 and that
/// each interior term is the reduced mediant of its two neighbors.
pub fn neighbor_check(terms: &[Frac]) -> Result<NeighborReport> {
    if terms.len() < 2 {
        return Err(Error::Domain(format!(
            "neighbor check needs at least two terms, got {}",
            terms.len()
        )));
    }
    for (i, w) in terms.windows(2).enumerate() {
        let det = w[0].cross(w[1]);
        if det != 1 {
            return Err(Error::NeighborViolation {
                index: i,
                detail: format!("{} and {} have determinant {det}", w[0], w[1]),
            });
        }
    }
    for (i, w) in terms.windows(3).enumerate() {
        let mediant = w[0].mediant(w[2])?;
        if mediant != w[1] {
            return Err(Error::NeighborViolation {
                index: i + 1,
                detail: format!(
                    "{} is not the mediant {mediant} of {} and {}",
                    w[1], w[0], w[2]
                ),
            });
        }
    }
    Ok(NeighborReport {
        pairs_checked: terms.len() - 1,
        triples_checked: terms.len().saturating_sub(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{find, Params};
    use crate::sequence::{generate, SeqSpec};

    fn fr(s: &str) -> Vec<Frac> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn example_images() {
        let eq35 = find("eq35")
            .unwrap()
            .instantiate(&Params::ms(1, 1))
            .unwrap();
        let dom = generate(&eq35.domain).unwrap();
        assert_eq!(dom.terms(), fr("0/1 1/4 1/3"));
        let out = apply_map(&eq35, &dom).unwrap();
        assert_eq!(out.image.terms(), fr("1/3 2/5 1/2"));
        assert_eq!(out.pairs[0], (Frac::ZERO, Frac::new(1, 3).unwrap()));

        let eq47 = find("eq47")
            .unwrap()
            .instantiate(&Params::ms(1, 1))
            .unwrap();
        let out = apply_map(&eq47, &dom).unwrap();
        assert_eq!(out.image.terms(), fr("1/3 2/5 1/2"));
        assert_eq!(out.pairs[0], (Frac::ZERO, Frac::HALF));
    }

    #[test]
    fn report_contents() {
        let eq60 = find("eq60")
            .unwrap()
            .instantiate(&Params::ms(1, 1))
            .unwrap();
        let r = verify_map(&eq60).unwrap().into_result().unwrap();
        assert!(r.involutory && r.surjective);
        assert_eq!(r.fixed_points, fr("2/5"));

        let eq74 = find("eq74")
            .unwrap()
            .instantiate(&Params::ms(3, 1))
            .unwrap();
        let r = verify_map(&eq74).unwrap().into_result().unwrap();
        assert!(!r.surjective);
        assert_eq!(r.endpoints_checked, 2);
    }

    #[test]
    fn catches_wrong_claims() {
        let mut h = find("eq35")
            .unwrap()
            .instantiate(&Params::ms(2, 1))
            .unwrap();
        h.direction = Direction::Reversing;
        assert!(!verify_map(&h).unwrap().passed);

        let mut h = find("eq74")
            .unwrap()
            .instantiate(&Params::ms(2, 1))
            .unwrap();
        h.injectivity = Injectivity::Bijective;
        let err = verify_map(&h).unwrap().into_result().unwrap_err();
        assert!(matches!(err, Error::VerificationFailure { .. }));

        let mut h = find("eq4").unwrap().instantiate(&Params::m(3)).unwrap();
        h.codomain = SeqSpec::boolean(6, 3).half_high();
        assert!(!verify_map(&h).unwrap().passed);
    }

    #[test]
    fn neighbors() {
        let f6 = generate(&SeqSpec::full(6)).unwrap();
        assert!(neighbor_check(f6.terms()).is_ok());
        assert!(neighbor_check(&fr("1/3 2/5 1/2")).is_ok());
        assert!(neighbor_check(&fr("0/1 1/3 1/2")).is_ok());
        assert!(neighbor_check(&fr("0/1 1/3")).is_ok());
        assert!(neighbor_check(&fr("0/1")).is_err());
        assert!(matches!(
            neighbor_check(&fr("0/1 1/3 1/1")),
            Err(Error::NeighborViolation { index: 1, .. })
        ));
        assert_eq!(
            neighbor_check(&fr("0/1 1/2 1/1")).unwrap(),
            NeighborReport {
                pairs_checked: 2,
                triples_checked: 1
            }
        );
    }
}
