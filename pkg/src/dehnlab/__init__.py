"""dehnlab: exact Dehn function computations for finite group presentations."""

__version__ = "0.1.0"

from .area import (AreaCertificate, SearchConfig, area_bruteforce, area_search,
                   certificate_from_json, certificate_to_json,
                   power_commutator_lower_bound, verify_certificate)
from .dehn import (DehnEntry, DehnTable, GrowthClass, classify_growth,
                   dehn_function, dehn_table_to_csv, dehn_table_to_json,
                   enumerate_null_words, family_dehn_function)
from .errors import (BudgetExceededError, DehnlabError,
                     FinitenessNotEstablishedError, InsufficientDataError,
                     NotNullHomotopicError, ParseError, UniverseMismatchError,
                     ValidationError)
from .families import (REGISTRY, FamilySpec, PolycyclicData, build_G1,
                       build_G1_redundant, build_G2, build_G3, build_ZpZq,
                       build_dihedral, build_example24, ex24_witness,
                       g3_certificate, g3_witness, get_family, validate_family)
from .mean import (MeanReport, NullWordCensus, census,
                   cyclic_family_closed_forms, family_mean, family_smean,
                   mean_dehn, report_to_csv, report_to_json, smean_dehn)
from .presentation import (Presentation, parse_presentation,
                           presentation_digest, presentation_to_text)
from .realization import (FiniteRealization, coset_enumerate, element_order,
                          element_word, evaluate, is_null_homotopic,
                          realization_to_csv)
from .words import (Letter, Word, concat, cyclic_conjugates, cyclic_reduce,
                    empty_word, free_reduce, invert, lex_key, parse_word,
                    print_word)
