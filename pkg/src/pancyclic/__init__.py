"""Pancyclicity of digraphs with large semi-degrees: spectra, exceptional
families, lemma checks and seeded verification campaigns."""
from .digraph import Digraph, DigraphBuilder, DigraphParseError, format_digraph, parse_digraph
from .families import FamilyLabel, TheoremHypothesis, check_hypothesis, recognize
from .harness import CampaignReport, TheoremVerdict, check_theorem, run_campaign, sample_hypothesis_digraph
from .lemmas import LemmaReport, Status
from .spectrum import Cycle, CycleSpectrum, Path, cycle_spectrum, find_cycle_of_length, spectrum_oracle

__all__ = [
    "CampaignReport",
    "Cycle",
    "CycleSpectrum",
    "Digraph",
    "DigraphBuilder",
    "DigraphParseError",
    "FamilyLabel",
    "LemmaReport",
    "Path",
    "Status",
    "TheoremHypothesis",
    "TheoremVerdict",
    "check_hypothesis",
    "check_theorem",
    "cycle_spectrum",
    "find_cycle_of_length",
    "format_digraph",
    "parse_digraph",
    "recognize",
    "run_campaign",
    "sample_hypothesis_digraph",
    "spectrum_oracle",
]
