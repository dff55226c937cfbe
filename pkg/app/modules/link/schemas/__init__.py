from app.modules.link.schemas.link import LinkSpec, MetadataModel

__all__ = [
    "LinkSpec",
    "MetadataModel",
]
