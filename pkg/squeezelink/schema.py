class ValidationError(ValueError):
    def __init__(self, path, msg):
        self.path = path
        self.msg = msg
        super().__init__(str(self))

    def __str__(self):
        return f"{self.path}: {self.msg}"


class O:
    """Optional."""

    def __init__(self, wrapped):
        self.wrapped = wrapped

    def __repr__(self):
        return f"O[{self.wrapped}]"


class Union:
    """Any of."""

    def __init__(self, *wrapped):
        self.wrapped = wrapped

    def __repr__(self):
        return f"Union[{self.wrapped}]"


class Closed:
    """A mapping that rejects keys its schema does not name."""

    def __init__(self, wrapped):
        self.wrapped = wrapped

    def __repr__(self):
        return f"Closed[{self.wrapped}]"


def human_type_name(cls):
    return {
        bool: "a boolean",
        dict: "a mapping",
        float: "a number",
        int: "an integer",
        list: "a list",
        str: "a string",
        type(None): "nothing",
    }.get(cls, f"a {cls.__name__}")


def validate_schema(obj, schema):
    htn = human_type_name

    def explore(obj, schema, path):
        if isinstance(schema, O):
            if obj is None:
                return
            explore(obj, schema.wrapped, path)

        elif isinstance(schema, Union):
            for subtype in schema.wrapped:
                try:
                    explore(obj, subtype, path)
                    # one of the types is OK, early stop
                    return
                except ValidationError:
                    pass
            expected = ' or '.join(htn(s) for s in schema.wrapped)
            raise ValidationError(
                path, f"expected {expected}, got {htn(obj.__class__)}")

        elif isinstance(schema, Closed):
            if not isinstance(obj, dict):
                raise ValidationError(
                    path, f"expected a mapping, got {htn(obj.__class__)}")
            unknown = sorted(set(obj) - set(schema.wrapped))
            if unknown:
                raise ValidationError(
                    path, f"unknown key(s) {', '.join(map(str, unknown))}")
            explore(obj, schema.wrapped, path)

        elif isinstance(schema, list):
            subtype, = schema
            if not isinstance(obj, list):
                raise ValidationError(
                    path, f"expected a list, got {htn(obj.__class__)}")
            for i, item in enumerate(obj):
                explore(item, subtype, f'{path}[{i}]')

        elif isinstance(schema, dict):
            try:
                for key, subtype in schema.items():
                    explore(obj.get(key), subtype, f'{path}.{key}')
            except ValidationError:
                raise
            except Exception:
                raise ValidationError(
                    path, f"expected a mapping, got {htn(obj.__class__)}")

        # bool is an int subclass, but never a valid count or magnitude
        elif isinstance(obj, bool) and schema is not bool:
            raise ValidationError(
                path, f"expected {htn(schema)}, got {htn(bool)}")

        elif not isinstance(obj, schema):
            raise ValidationError(
                path, f"expected {htn(schema)}, got {htn(obj.__class__)}")

    explore(obj, schema, '')


number = Union(float, int)
sweep = Union(float, int, str, [number])

RUN_CONFIG_PROPERTIES = {
    'nbar': O(sweep),
    'squeeze': O(number),
    'squeeze-convention': O(str),
    'eta': O(number),
    'length-ratio': O(sweep),
    'model': O(str),
    'alphabet': O(Union(str, [number])),
    'copies': O(int),
    'trials': O(int),
    'seed': O(int),
    'workers': O(int),
    'out': O(str),
    'format': O(str),
    'payload': O(str),
    'payload-file': O(str),
}

RUN_CONFIG_SCHEMA = Closed(RUN_CONFIG_PROPERTIES)


OUTPUT_FORMATS = ('csv', 'json')


def validate_run_config(json):
    validate_schema(json, RUN_CONFIG_SCHEMA)
    fmt = json.get('format')
    if fmt is not None and fmt not in OUTPUT_FORMATS:
        raise ValidationError(
            '.format', f"expected one of {', '.join(OUTPUT_FORMATS)}, "
            f"got {fmt!r}")


MANIFEST_SCHEMA = {
    'version': str,
    'command': str,
    'config': dict,
    'seed': O(int),
    'timestamp': str,
    'outputs': dict,
}


def validate_manifest(json):
    validate_schema(json, MANIFEST_SCHEMA)
    validate_run_config(json['config'])
