use super::moves::{apply_r3, r1_sites, r2_sites, r3_sites, remove_straight};
use super::Diagram;

/// Bound on third moves tried per simplification.
const R3_BUDGET: usize = 256;

/// Greedily shrinks a diagram with crossing-removing first and second moves.
/// A third move is taken only when it immediately exposes a removal.
pub fn reidemeister_simplify(d: &Diagram) -> Diagram {
    let mut xs = d.crossings().to_vec();
    let mut loops = d.free_loops();
    let mut budget = R3_BUDGET;
    loop {
        if let Some(&c) = r1_sites(&xs).first() {
            (xs, loops) = remove_straight(&xs, loops, &[c]);
            continue;
        }
        if let Some(&(a, b)) = r2_sites(&xs).first() {
            (xs, loops) = remove_straight(&xs, loops, &[a, b]);
            continue;
        }
        let mut advanced = false;
        for tri in r3_sites(&xs) {
            if budget == 0 {
                break;
            }
            budget -= 1;
            let moved = apply_r3(&xs, tri);
            if !r1_sites(&moved).is_empty() || !r2_sites(&moved).is_empty() {
                xs = moved;
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    Diagram::from_parts_unchecked(xs, loops)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kink_unknots() {
        let d: Diagram = "X[1,1,2,2]".parse().unwrap();
        assert_eq!(reidemeister_simplify(&d), Diagram::unknot());
        let two: Diagram = "X[1,1,2,3],X[2,4,4,3]".parse().unwrap();
        assert_eq!(reidemeister_simplify(&two), Diagram::unknot());
    }

    #[test]
    fn trefoil_is_fixed() {
        let t: Diagram = "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]".parse().unwrap();
        assert_eq!(reidemeister_simplify(&t), t);
    }
}
