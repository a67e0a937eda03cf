"""
Módulo de servicios para la lógica de la aplicación.
Siguiendo el principio de Single Responsibility, cada servicio
maneja un grupo de comandos de la línea de órdenes.
"""

from .family_service import FamilyService
from .check_service import CheckService
from .report_service import ReportService
from .plot_service import PlotService

__all__ = [
    'FamilyService',
    'CheckService',
    'ReportService',
    'PlotService'
]
