from .network import NetworkState, create_network, activations, forward, update

__all__ = ["NetworkState", "create_network", "activations", "forward", "update"]
