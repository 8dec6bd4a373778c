use super::{Crossing, Diagram, DiagramError, SingularDiagram};

/// A named knot with a standard diagram code.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub pd: &'static str,
}

impl CatalogEntry {
    pub fn diagram(&self) -> Diagram {
        self.pd.parse().expect("catalog codes are valid")
    }
}

const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "unknot", pd: "" },
    CatalogEntry { name: "trefoil", pd: "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]" },
    CatalogEntry { name: "figure-eight", pd: "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]" },
    CatalogEntry { name: "5_1", pd: "X[1,6,2,7],X[3,8,4,9],X[5,10,6,1],X[7,2,8,3],X[9,4,10,5]" },
    CatalogEntry { name: "5_2", pd: "X[1,4,2,5],X[3,8,4,9],X[5,10,6,1],X[9,6,10,7],X[7,2,8,3]" },
    CatalogEntry { name: "6_1", pd: "X[1,4,2,5],X[7,10,8,11],X[3,9,4,8],X[9,3,10,2],X[5,12,6,1],X[11,6,12,7]" },
];

/// Small knot table used for naming classes and building test corpora.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

/// Turns the listed crossings (0-based) into double points numbered in
/// order of appearance. The original over-strand becomes the designated
/// strand, so the all-`a` resolution gives back `d`.
pub fn make_singular(d: &Diagram, sites: &[usize]) -> Result<SingularDiagram, DiagramError> {
    let o = d.orientation()?;
    let mut crossings: Vec<Crossing> = d.crossings().to_vec();
    for &c in sites {
        if c >= crossings.len() {
            return Err(DiagramError::Ordering(format!("no crossing {c} in a {}-crossing diagram", crossings.len())));
        }
        let over_in = if o.is_incoming(c, 1) { 1 } else { 3 };
        let x = &crossings[c];
        crossings[c] = Crossing::singular(0, std::array::from_fn(|n| x.at(over_in + n)));
    }
    let mut next = 0;
    for x in crossings.iter_mut().filter(|x| x.is_singular()) {
        next += 1;
        *x = Crossing::singular(next, x.strands);
    }
    SingularDiagram::new(crossings, d.free_loops())
}
