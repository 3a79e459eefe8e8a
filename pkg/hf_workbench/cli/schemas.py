# Centralized error messages
BAD_BINDING = 'Bindings are written name=value'
BAD_SEARCH_RANK = 'Search rank must lie between 0 and 3'
EMPTY_VARIABLES = 'At least one variable is required'

MAX_SEARCH_RANK = 3
MEMBERS_SHOWN = 64
