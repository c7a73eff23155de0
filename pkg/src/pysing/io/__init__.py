from .surface_file import SurfaceFile
from .report_writer import REPORT_SCHEMA, render_json, render_text, validate_report, write_report
