def handle(args):
    from squeezelink.measurements import all
    from squeezelink.utils import tabulate
    headers = ("Name", "Class name", "Module", "Description")
    rows = [(name, cls.__name__, cls.__module__, cls.description)
            for name, cls in sorted(all().items())]
    print("\n".join(tabulate(rows, headers=headers)))
    return 0


def build(parser):
    parser.add_parser('models', help="list measurement models")
    return 'models', handle
