"""Proof equivalence for linear sequent calculi via binary decision trees."""
from .bdt import BDT, Leaf, Node, equiv, equiv_oracle, evaluate, is_free, parse_bdt
from .classical import check_mall_proof, mall_bdt_slicing, mall_equiv, mall_equiv_oracle, parse_mall_proof
from .core import Sequent, parse_formula, parse_sequent
from .encode import check_representation, encode_bdt
from .equiv import EquivVerdict, proof_equiv, proof_equiv_oracle
from .errors import MalleqError, ParseError, ProofError
from .proof import Proof, check_proof, parse_proof, show_proof
from .slicing import bdt_slicing, expand, slicing

__version__ = "0.1.0"
