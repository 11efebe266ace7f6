"""Width-optimal LR-drawings of binary trees and near-linear-area
outerplanar straight-line drawings, with geometric verification."""

__version__ = "0.1.0"
