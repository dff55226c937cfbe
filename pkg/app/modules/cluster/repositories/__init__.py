from app.modules.cluster.repositories.server_store import ServerStore

__all__ = ["ServerStore"]
