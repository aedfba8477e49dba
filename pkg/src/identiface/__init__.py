"""Identifiable face generation: multi-modal conditional diffusion with
iterative mask-guided refinement, identity retrieval, and a session service.

Subpackages:
    data_synth   procedural labeled face corpus (GT / LQ / sketch / text / masks)
    diffusion    latent diffusion backbone: codec, schedule, DDIM, control branch
    identity     face embedders, retrieval database, threshold calibration, clustering
    id_loss      sigmoid-gated facial identity training loss
    pipeline     iterative generation sessions (Return / Keep / Undo)
    policy_sim   heuristic simulated witness for batch evaluation
    metrics      identity and image-quality evaluation suite
    service      HTTP session service and event-sourced store
"""

__version__ = "0.1.0"
