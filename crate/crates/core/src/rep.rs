//! Binary dot product representations and their verification.
//!
//! A representation of dimension `d` with threshold `p` assigns a 0/1
//! vector of length `d` to every vertex. It represents a graph when two
//! distinct vertices are adjacent exactly if their vectors have dot product
//! at least `p`. Validity is always checked, never assumed.

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRepresentation {
    d: usize,
    p: usize,
    vectors: Vec<BitVector>,
}

impl BinaryRepresentation {
    pub fn new(d: usize, p: usize, vectors: Vec<BitVector>) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidParameter("threshold p must be >= 1".into()));
        }
        for v in &vectors {
            if v.dim() != d {
                return Err(Error::DimensionMismatch(v.dim(), d));
            }
        }
        Ok(BinaryRepresentation { d, p, vectors })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vector(&self, v: usize) -> &BitVector {
        &self.vectors[v]
    }

    pub fn vectors(&self) -> &[BitVector] {
        &self.vectors
    }

    /// Certificate text format: line 1 `d p n`, then `n` lines of
    /// `d`-character 0/1 strings in vertex order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.d, self.p, self.vectors.len());
        for v in &self.vectors {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::CertificateParse {
            line: 1,
            reason: "empty input".into(),
        })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        if nums.len() != 3 {
            return Err(Error::CertificateParse {
                line: 1,
                reason: format!("header must be 'd p n', got {header:?}"),
            });
        }
        let parse = |s: &str, what: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::CertificateParse {
                line: 1,
                reason: format!("bad {what}: {s:?}"),
            })
        };
        let d = parse(nums[0], "dimension")?;
        let p = parse(nums[1], "threshold")?;
        let n = parse(nums[2], "vertex count")?;
        let mut vectors = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines.next().ok_or_else(|| Error::CertificateParse {
                line: i + 2,
                reason: format!("expected {n} vector lines"),
            })?;
            if line.len() != d {
                return Err(Error::CertificateParse {
                    line: i + 2,
                    reason: format!("vector has {} bits, expected {d}", line.len()),
                });
            }
            let v: BitVector = line.parse().map_err(|_| Error::CertificateParse {
                line: i + 2,
                reason: "bad bit string".into(),
            })?;
            vectors.push(v);
        }
        BinaryRepresentation::new(d, p, vectors)
    }
}

/// The first vertex pair breaking the adjacency equivalence, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub dot: usize,
    pub adjacent: bool,
}

/// Checks `uv in E(g)  <=>  f(u).f(v) >= p` over all distinct pairs.
///
/// `Ok(None)` means the representation is valid for `g`.
pub fn verify_representation(g: &Graph, rep: &BinaryRepresentation) -> Result<Option<Violation>> {
    if rep.n() != g.n() {
        return Err(Error::MissingVertex {
            have: rep.n(),
            want: g.n(),
        });
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let dot = rep.vector(u).dot(rep.vector(v))?;
            let adjacent = g.has_edge(u, v);
            if (dot >= rep.p()) != adjacent {
                return Ok(Some(Violation {
                    u,
                    v,
                    dot,
                    adjacent,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraphSpec::*;

    #[test]
    fn all_zero_vectors_represent_edgeless_graphs() {
        for p in 1..=3 {
            let g = Edgeless(4).build().unwrap();
            let rep =
                BinaryRepresentation::new(3, p, vec![BitVector::zeros(3); 4]).unwrap();
            assert_eq!(verify_representation(&g, &rep).unwrap(), None);
        }
    }

    #[test]
    fn shared_norm_p_vector_represents_a_clique() {
        let g = Complete(4).build().unwrap();
        let v = BitVector::from_mask(5, 0b00011);
        let rep = BinaryRepresentation::new(5, 2, vec![v; 4]).unwrap();
        assert_eq!(verify_representation(&g, &rep).unwrap(), None);
    }

    #[test]
    fn missing_intersection_on_an_edge_is_reported() {
        let g = Complete(2).build().unwrap();
        let rep = BinaryRepresentation::new(2, 1, vec![BitVector::zeros(2); 2]).unwrap();
        let violation = verify_representation(&g, &rep).unwrap().unwrap();
        assert_eq!((violation.u, violation.v), (0, 1));
        assert!(violation.adjacent);
        assert_eq!(violation.dot, 0);
    }

    #[test]
    fn vertex_count_mismatch_is_an_error() {
        let g = Complete(3).build().unwrap();
        let rep = BinaryRepresentation::new(2, 1, vec![BitVector::zeros(2); 2]).unwrap();
        assert!(verify_representation(&g, &rep).is_err());
    }

    #[test]
    fn certificate_text_round_trips() {
        let rep = BinaryRepresentation::new(
            3,
            2,
            vec![
                BitVector::ones(3),
                BitVector::from_mask(3, 0b011),
                BitVector::from_mask(3, 0b101),
            ],
        )
        .unwrap();
        let text = rep.to_text();
        assert_eq!(text, "3 2 3\n111\n110\n101\n");
        assert_eq!(BinaryRepresentation::from_text(&text).unwrap(), rep);
    }

    #[test]
    fn zero_dimension_certificate_round_trips() {
        let rep = BinaryRepresentation::new(0, 1, vec![BitVector::zeros(0); 2]).unwrap();
        let text = rep.to_text();
        assert_eq!(text, "0 1 2\n\n\n");
        assert_eq!(BinaryRepresentation::from_text(&text).unwrap(), rep);
    }
}
