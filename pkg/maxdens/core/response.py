import json

from pydantic import ValidationError

from .exceptions import MaxDensError


def create_json_from_validation_error(exception: ValidationError):
    return {
        'error': json.loads(exception.json()),
        'error_count': exception.error_count(),
        'title': str(exception.title),
        'alias': 'validation_error',
    }


def create_json_from_maxdens_error(exception: MaxDensError):
    return {'error': exception.as_dict(), 'alias': exception.alias}
