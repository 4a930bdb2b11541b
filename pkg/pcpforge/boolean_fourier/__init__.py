from pcpforge.boolean_fourier.tables import BooleanTable, FourierSpectrum
from pcpforge.boolean_fourier.tables import fwht, wht, inverse_wht, naive_wht, parseval
from pcpforge.boolean_fourier.tables import character, character_table, fold, long_code
from pcpforge.boolean_fourier.tables import constant_table, random_table

__all__ = [
    "BooleanTable", "FourierSpectrum",
    "fwht", "wht", "inverse_wht", "naive_wht", "parseval",
    "character", "character_table", "fold", "long_code",
    "constant_table", "random_table",
]
