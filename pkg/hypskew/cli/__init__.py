from hypskew.core.cli import get_jobs
from hypskew.core.cli import main
from hypskew.core.experiment import EXPERIMENTS
from hypskew.core.experiment import ExperimentConfig
from hypskew.core.experiment import run_experiment
from hypskew.core.lemmas import LemmaResult
from hypskew.core.lemmas import format_lemma_table
from hypskew.core.lemmas import verify_lemmas
from hypskew.core.report import CSV_COLUMNS
from hypskew.core.report import write_csv
from hypskew.core.report import write_json
from hypskew.core.svg import Scene
from hypskew.core.svg import color_ramp
from hypskew.core.svg import render_svg
from hypskew.core.utils import call_operation
