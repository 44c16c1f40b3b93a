use crate::graph::{Dart, Graph, RotationSystem};

use super::EmbeddingError;

/// Facial walks of one embedding, each a cyclic dart sequence.
///
/// Walks are orbits of `d -> next(twin(d))`: arrive along `d`'s edge at the
/// twin dart, then leave by the dart following it in the rotation. Faces are
/// listed by their smallest dart, and each walk starts at that dart. An
/// edgeless graph has a single empty walk (the whole sphere).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCollection {
    faces: Vec<Vec<Dart>>,
}

impl FaceCollection {
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Sum of walk lengths; equals the dart count.
    pub fn total_length(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }
}

pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> FaceCollection {
    let darts = g.dart_count();
    if darts == 0 {
        return FaceCollection {
            faces: vec![Vec::new()],
        };
    }
    let mut seen = vec![false; darts];
    let mut faces = Vec::new();
    for start in 0..darts as Dart {
        if seen[start as usize] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            seen[d as usize] = true;
            walk.push(d);
            d = rot.face_step(d);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    FaceCollection { faces }
}

/// Genus from the Euler relation `V - E + F = 2 - 2k`.
pub fn euler_genus(vertices: usize, edges: usize, faces: usize) -> Result<usize, EmbeddingError> {
    let excess = 2 + edges as i64 - vertices as i64 - faces as i64;
    if excess < 0 || excess % 2 != 0 {
        return Err(EmbeddingError::EulerViolation {
            vertices,
            edges,
            faces,
        });
    }
    Ok((excess / 2) as usize)
}

pub fn genus_of(g: &Graph, rot: &RotationSystem) -> Result<usize, EmbeddingError> {
    let faces = trace_faces(g, rot);
    euler_genus(g.vertex_count(), g.edge_count(), faces.face_count())
}
