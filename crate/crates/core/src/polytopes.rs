//! The five 3-dimensional 5-vertex reflexive polytopes: validation of the
//! reflexivity/terminality/Fano conditions, anticanonical Laurent families
//! and the extended matrices feeding the hypergeometric systems.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactcore::linalg::IMat;

pub type Vec3 = [i64; 3];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("vertices must be distinct")]
    DuplicateVertices,
    #[error("vertices do not affinely span 3-space")]
    NotFullDimensional,
    #[error("invalid vertex data: {0}")]
    BadInput(String),
}

/// Lattice polytope given by its vertices (column convention).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePolytope {
    vertices: Vec<Vec3>,
}

/// Anticanonical Laurent family: one monomial (lattice point) per symbolic
/// coefficient, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaurentFamily {
    pub monomials: Vec<Vec3>,
    pub coefficients: Vec<String>,
}

/// Extended matrix and exponent vector for the hypergeometric system of the
/// family: top row all ones, columns the lattice points, inhomogeneity
/// `(-1, 0, 0, 0)`.
#[derive(Debug, Clone)]
pub struct GkzData {
    pub a: IMat,
    pub beta: [i64; 4],
}

impl LatticePolytope {
    pub fn new(vertices: Vec<Vec3>) -> Result<Self, PolytopeError> {
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i] == vertices[j] {
                    return Err(PolytopeError::DuplicateVertices);
                }
            }
        }
        let p = LatticePolytope { vertices };
        if p.vertices.len() < 4 || p.facets().len() < 4 {
            return Err(PolytopeError::NotFullDimensional);
        }
        Ok(p)
    }

    /// The five catalogued polytopes, index 0..=4.
    pub fn standard(index: usize) -> Self {
        let columns: [&[Vec3]; 5] = [
            &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, -1], [-1, -1, -2]],
            &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, -1], [0, -1, -1]],
            &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, -1, -1], [-1, -1, -1]],
            &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, 0], [0, 0, -1]],
            &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, -1], [-1, -1, -1]],
        ];
        LatticePolytope::new(columns[index].to_vec()).expect("catalogue data is valid")
    }

    /// Parse the JSON vertex-column format, e.g.
    /// `[[1,0,0],[0,1,0],[0,0,1],[0,0,-1],[-1,-1,-2]]`.
    pub fn from_json(src: &str) -> Result<Self, PolytopeError> {
        let vertices: Vec<Vec3> =
            serde_json::from_str(src).map_err(|e| PolytopeError::BadInput(e.to_string()))?;
        LatticePolytope::new(vertices)
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    /// Supporting facet planes `n . x <= c`, primitive inward-normalized.
    /// Enumerated by the exhaustive vertex-triple test; at 5 vertices this is
    /// at most 10 triples.
    pub fn facets(&self) -> Vec<(Vec3, i64)> {
        let vs = &self.vertices;
        let mut facets: Vec<(Vec3, i64)> = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                for k in j + 1..vs.len() {
                    let u = sub(vs[j], vs[i]);
                    let w = sub(vs[k], vs[i]);
                    let mut n = cross(u, w);
                    if n == [0, 0, 0] {
                        continue;
                    }
                    let g = gcd3(n);
                    n = [n[0] / g, n[1] / g, n[2] / g];
                    let mut c = dot(n, vs[i]);
                    // orient so every vertex satisfies n.x <= c
                    if vs.iter().all(|&v| dot(n, v) <= c) {
                        // keep
                    } else if vs.iter().all(|&v| dot(n, v) >= c) {
                        n = [-n[0], -n[1], -n[2]];
                        c = -c;
                    } else {
                        continue;
                    }
                    if !facets.contains(&(n, c)) {
                        facets.push((n, c));
                    }
                }
            }
        }
        facets
    }

    fn contains(&self, p: Vec3, facets: &[(Vec3, i64)]) -> bool {
        facets.iter().all(|&(n, c)| dot(n, p) <= c)
    }

    fn is_interior(&self, p: Vec3, facets: &[(Vec3, i64)]) -> bool {
        facets.iter().all(|&(n, c)| dot(n, p) < c)
    }

    /// All lattice points of the convex hull, by bounding-box scan against
    /// the supporting halfspaces.  Sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<Vec3> {
        let facets = self.facets();
        let lo: Vec3 = [0, 1, 2].map(|i| self.vertices.iter().map(|v| v[i]).min().unwrap());
        let hi: Vec3 = [0, 1, 2].map(|i| self.vertices.iter().map(|v| v[i]).max().unwrap());
        let mut pts = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = [x, y, z];
                    if self.contains(p, &facets) {
                        pts.push(p);
                    }
                }
            }
        }
        pts
    }

    /// Conditions (a)-(c): vertices integral (by construction), the origin the
    /// unique interior lattice point, boundary lattice points exactly the
    /// vertices; every facet inequality of the form `n . x <= 1`.
    pub fn is_reflexive_terminal(&self) -> bool {
        let facets = self.facets();
        if facets.iter().any(|&(_, c)| c != 1) {
            return false;
        }
        let mut interior = 0usize;
        for p in self.lattice_points() {
            if self.is_interior(p, &facets) {
                if p != [0, 0, 0] {
                    return false;
                }
                interior += 1;
            } else if !self.vertices.contains(&p) {
                return false;
            }
        }
        interior == 1
    }

    /// Condition (d): every facet is a triangle whose vertices generate the
    /// lattice (vertex matrix of determinant +-1).
    pub fn is_fano(&self) -> bool {
        if !self.is_reflexive_terminal() {
            return false;
        }
        for (n, c) in self.facets() {
            let on_facet: Vec<Vec3> = self
                .vertices
                .iter()
                .copied()
                .filter(|&v| dot(n, v) == c)
                .collect();
            if on_facet.len() != 3 {
                return false;
            }
            let d = det3(on_facet[0], on_facet[1], on_facet[2]);
            if d.abs() != 1 {
                return false;
            }
        }
        true
    }

    /// One symbolic coefficient per lattice point: the constant term `a1`
    /// first, then the vertices in column order, then any remaining points.
    pub fn anticanonical_family(&self) -> LaurentFamily {
        let mut monomials = vec![[0, 0, 0]];
        for &v in &self.vertices {
            monomials.push(v);
        }
        for p in self.lattice_points() {
            if !monomials.contains(&p) {
                monomials.push(p);
            }
        }
        let coefficients = (1..=monomials.len()).map(|i| format!("a{i}")).collect();
        LaurentFamily { monomials, coefficients }
    }

    /// Extended matrix: first row all ones, rows 2-4 the lattice points in
    /// family order; inhomogeneity `(-1, 0, 0, 0)`.
    pub fn gkz_matrix(&self) -> GkzData {
        let fam = self.anticanonical_family();
        let k = fam.monomials.len();
        let a = IMat::from_fn(4, k, |i, j| {
            if i == 0 {
                BigInt::from(1)
            } else {
                BigInt::from(fam.monomials[j][i - 1])
            }
        });
        GkzData { a, beta: [-1, 0, 0, 0] }
    }
}

impl LaurentFamily {
    /// Human-readable Laurent expression, e.g.
    /// `a1 + a2*t1 + ... + a6*t1^-1*t2^-1*t3^-2`.
    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        for (c, m) in self.coefficients.iter().zip(&self.monomials) {
            let mut s = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e != 0 {
                    s.push_str(&format!("*t{}^{}", i + 1, e));
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: Vec3, b: Vec3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn gcd3(a: Vec3) -> i64 {
    fn g(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            g(b, a % b)
        }
    }
    g(g(a[0], a[1]), a[2]).max(1)
}

fn det3(a: Vec3, b: Vec3, c: Vec3) -> i64 {
    dot(a, cross(b, c))
}
