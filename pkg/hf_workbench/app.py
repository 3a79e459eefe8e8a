from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from hf_workbench.resources.compiler.controller import (
    router as compiler_router,
)
from hf_workbench.resources.erecursion.controller import (
    router as erecursion_router,
)
from hf_workbench.resources.formula.controller import (
    router as formula_router,
)
from hf_workbench.resources.fullmodel.controller import (
    router as fullmodel_router,
)
from hf_workbench.resources.hfset.controller import router as hfset_router
from hf_workbench.resources.hierarchy.controller import (
    router as hierarchy_router,
)
from hf_workbench.resources.kripke.controller import router as kripke_router
from hf_workbench.resources.operations.controller import (
    router as operations_router,
)
from hf_workbench.resources.oracle.controller import router as oracle_router
from hf_workbench.resources.realizability.controller import (
    router as realizability_router,
)
from hf_workbench.settings import get_settings

settings = get_settings()

app = FastAPI(
    title='HF Workbench API',
    version=settings.API_VERSION,
    debug=settings.API_DEBUG,
    description="""
    Experiments with hereditarily finite sets: the constructible
    hierarchy built from the fundamental operations, Kripke and
    full-model forcing, and E-recursive realizability.

    ## Resources

    * **Sets**: literals, pairs and set algebra
    * **Formulas**: parsing, printing and classification
    * **Operations**: the fundamental operations and their terms
    * **Compiler**: Σ₀ separation compiled to operation terms
    * **Hierarchy**: stages, witnesses, α* and definable subsets
    * **Oracle**: brute-force truth and comprehension
    * **Kripke**: model validation and forcing
    * **Full model**: names, 1_p and δ-coding
    * **E-recursion**: the fuel-bounded application machine
    * **Realizability**: three-valued realizer checks and audits

    ## Documentation

    * `/docs`: Swagger UI
    * `/redoc`: ReDoc
    """,
    openapi_tags=[
        {'name': 'Sets', 'description': 'Hereditarily finite values'},
        {'name': 'Formulas', 'description': 'Formula text and ASTs'},
        {
            'name': 'Operations',
            'description': 'Fundamental operations and operation terms',
        },
        {'name': 'Compiler', 'description': 'Separation compiler'},
        {'name': 'Hierarchy', 'description': 'Constructible stages'},
        {'name': 'Oracle', 'description': 'Reference truth evaluator'},
        {'name': 'Kripke', 'description': 'Intuitionistic forcing'},
        {'name': 'Full model', 'description': 'Forcing over names'},
        {'name': 'E-recursion', 'description': 'Application machine'},
        {
            'name': 'Realizability',
            'description': 'Realizer verdicts and truth audits',
        },
    ],
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=['*'],
    allow_credentials=True,
    allow_methods=['*'],
    allow_headers=['*'],
)

app.include_router(hfset_router)
app.include_router(formula_router)
app.include_router(operations_router)
app.include_router(compiler_router)
app.include_router(hierarchy_router)
app.include_router(oracle_router)
app.include_router(kripke_router)
app.include_router(fullmodel_router)
app.include_router(erecursion_router)
app.include_router(realizability_router)
