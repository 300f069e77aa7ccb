//! Bundled example graphs.

use crate::format::parse_graph;
use crate::graph::Admg;

pub const FIGURE1: &str = include_str!("../fixtures/figure1.admg");
pub const FIGURE2: &str = include_str!("../fixtures/figure2.admg");
pub const FIGURE3: &str = include_str!("../fixtures/figure3.admg");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    /// The edge list was inferred rather than given verbatim.
    pub reconstructed: bool,
}

pub const ALL: [Fixture; 3] = [
    Fixture {
        name: "figure1",
        text: FIGURE1,
        reconstructed: false,
    },
    Fixture {
        name: "figure2",
        text: FIGURE2,
        reconstructed: false,
    },
    Fixture {
        name: "figure3",
        text: FIGURE3,
        reconstructed: true,
    },
];

impl Fixture {
    pub fn by_name(name: &str) -> Option<Fixture> {
        ALL.iter().copied().find(|f| f.name == name)
    }

    pub fn graph(&self) -> Admg {
        parse_graph(self.text).expect("bundled fixtures parse")
    }
}

pub fn figure1() -> Admg {
    ALL[0].graph()
}

pub fn figure2() -> Admg {
    ALL[1].graph()
}

pub fn figure3() -> Admg {
    ALL[2].graph()
}
