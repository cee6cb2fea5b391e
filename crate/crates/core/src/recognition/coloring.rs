//! Proper 3-colourings by DSATUR-ordered backtracking.

use alloc::vec;
use alloc::vec::Vec;

use super::RecognitionError;
use crate::graph::{Graph, VertexSet};

/// Default vertex cap for [`three_coloring`].
pub const DEFAULT_COLORING_LIMIT: usize = 60;

/// A map from vertices to colours `0..3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn from_colors(colors: Vec<u8>) -> Result<Coloring, RecognitionError> {
        if colors.iter().any(|&c| c > 2) {
            return Err(RecognitionError::InvalidColoring("colours must be 0, 1 or 2"));
        }
        Ok(Coloring { colors })
    }

    /// Builds a colouring from three classes that partition `0..n`.
    pub fn from_classes(n: usize, classes: &[VertexSet; 3]) -> Result<Coloring, RecognitionError> {
        let mut colors = vec![u8::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &v in class.iter() {
                if v >= n {
                    return Err(RecognitionError::InvalidColoring("vertex out of range"));
                }
                if colors[v] != u8::MAX {
                    return Err(RecognitionError::InvalidColoring("classes overlap"));
                }
                colors[v] = c as u8;
            }
        }
        if colors.contains(&u8::MAX) {
            return Err(RecognitionError::InvalidColoring("classes do not cover every vertex"));
        }
        Ok(Coloring { colors })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn classes(&self) -> [VertexSet; 3] {
        let class = |c: u8| (0..self.n()).filter(|&v| self.colors[v] == c).collect();
        [class(0), class(1), class(2)]
    }

    /// No edge joins two vertices of the same colour.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.n() == g.n() && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// First monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .into_iter()
            .find(|&(u, v)| self.colors[u] == self.colors[v])
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    color: Vec<u8>,
    /// `seen[v][c]`: coloured neighbours of `v` with colour `c`.
    seen: Vec<[u32; 3]>,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.seen[v].iter().filter(|&&x| x > 0).count()
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v] == u8::MAX)
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), usize::MAX - v))
    }

    fn set(&mut self, v: usize, c: u8, delta: i32) {
        for w in self.g.neighbors(v) {
            let s = &mut self.seen[w][c as usize];
            *s = (*s as i32 + delta) as u32;
        }
    }

    /// `used` is the number of colours used so far; a fresh colour is only
    /// ever the next unused one, which removes colour-permutation symmetry.
    fn run(&mut self, used: u8) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        for c in 0..(used + 1).min(3) {
            if self.seen[v][c as usize] > 0 {
                continue;
            }
            self.color[v] = c;
            self.set(v, c, 1);
            if self.run(used.max(c + 1)) {
                return true;
            }
            self.set(v, c, -1);
            self.color[v] = u8::MAX;
        }
        false
    }
}

/// A proper 3-colouring of `g`, or `None` if none exists.
/// Refuses graphs above [`DEFAULT_COLORING_LIMIT`] vertices.
pub fn three_coloring(g: &Graph) -> Result<Option<Coloring>, RecognitionError> {
    three_coloring_with_limit(g, DEFAULT_COLORING_LIMIT)
}

pub fn three_coloring_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Option<Coloring>, RecognitionError> {
    if g.n() > limit {
        return Err(RecognitionError::ScaleLimitExceeded { n: g.n(), limit });
    }
    let mut s = Dsatur {
        g,
        color: vec![u8::MAX; g.n()],
        seen: vec![[0; 3]; g.n()],
    };
    Ok(s.run(0).then_some(Coloring { colors: s.color }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_needs_three() {
        let g = Graph::cycle(7);
        let c = three_coloring(&g).unwrap().unwrap();
        assert!(c.is_proper(&g));
    }

    #[test]
    fn k4_is_not_three_colourable() {
        assert!(three_coloring(&Graph::complete(4)).unwrap().is_none());
    }

    #[test]
    fn wheel_on_odd_rim_is_not() {
        // W5: a hub joined to every vertex of a 5-cycle needs four colours.
        let mut edges: Vec<(usize, usize)> = Graph::cycle(5).edges();
        edges.extend((0..5).map(|v| (v, 5)));
        let g = Graph::from_edges(6, &edges).unwrap();
        assert!(three_coloring(&g).unwrap().is_none());
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            three_coloring_with_limit(&Graph::empty(5), 4),
            Err(RecognitionError::ScaleLimitExceeded { n: 5, limit: 4 })
        ));
    }

    #[test]
    fn classes_round_trip() {
        let c = Coloring::from_colors(vec![0, 1, 2, 1]).unwrap();
        let back = Coloring::from_classes(4, &c.classes()).unwrap();
        assert_eq!(c, back);
        assert!(Coloring::from_colors(vec![3]).is_err());
    }
}
